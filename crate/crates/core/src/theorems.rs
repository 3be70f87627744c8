//! Registry of property checks over the shipped corpus, keyed by stable ids.
//!
//! Each check returns the number of instances examined, or a description of
//! the first counterexample.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::congruence::{all_congruences, brute_force_congruences, is_0_regular, CongruenceSet, Signature, DEFAULT_ORACLE_LIMIT};
use crate::constructions::{
    aol_sandwich, boolean, bound, chain, glue_partitions, horizontal_sum, m_lattice, ordinal_sum, reversed_chain,
    sandwich, step, StepVariant,
};
use crate::corpus::{Corpus, Entry};
use crate::involution::{trivial_brouwer, InvolutionLattice, Structure};
use crate::order::FiniteLattice;
use crate::partition::Partition;
use crate::tower::{check_condition_c, check_condition_s, tower};

pub const PAIR_SEED: u64 = 0x05u64 << 32 | 0x0a1d;
pub const PAIR_COUNT: usize = 20;
pub const TOWER_STEPS: usize = 8;
const FILTER_LIMIT: usize = 16;
const BROUWER_SEARCH_MAX_N: usize = 6;

type Check = fn(&Corpus) -> Result<usize, String>;

pub struct Theorem {
    pub id: &'static str,
    pub summary: &'static str,
    check: Check,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: &'static str,
    pub instances: usize,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

impl Theorem {
    pub fn run(&self, corpus: &Corpus) -> Outcome {
        match (self.check)(corpus) {
            Ok(instances) => Outcome {
                id: self.id,
                instances,
                failure: None,
            },
            Err(msg) => Outcome {
                id: self.id,
                instances: 0,
                failure: Some(msg),
            },
        }
    }
}

static REGISTRY: &[Theorem] = &[
    Theorem {
        id: "oracle-equivalence",
        summary: "all_congruences agrees with brute force (lat, ilat)",
        check: oracle_equivalence,
    },
    Theorem {
        id: "osum-con-product",
        summary: "(α, β) ↦ α ⊕ β is an order isomorphism Con(L) × Con(M) → Con(L ⊕ M)",
        check: osum_con_product,
    },
    Theorem {
        id: "bM-square-plus-one",
        summary: "Con(B(M) ⊞ L₂²) is Con(M) extended by singletons, plus ∇",
        check: bm_square_plus_one,
    },
    Theorem {
        id: "tower-count",
        summary: "tower members have 2+i congruences and satisfy (s) and (c)",
        check: tower_count,
    },
    Theorem {
        id: "pk-preserved",
        summary: "the kleene step preserves pseudo-Kleene",
        check: pk_preserved,
    },
    Theorem {
        id: "aol-conbz",
        summary: "L₂ ⊕ K ⊕ L₂ is an antiortholattice with Con_BZ = Con_BZ0 ∪ {∇}",
        check: aol_conbz,
    },
    Theorem {
        id: "lld-simple",
        summary: "L ⊕ Lᵈ with trivial Brouwer complement is BZ-simple for 0-regular L",
        check: lld_simple,
    },
    Theorem {
        id: "aol-trivial-brouwer",
        summary: "a PBZ*-lattice is an antiortholattice iff its Brouwer complement is trivial",
        check: aol_trivial_brouwer,
    },
    Theorem {
        id: "hsum-square-con",
        summary: "Con(L ⊞ L₂²) = {eq(L/α ∪ {{a},{b}}) : α ∈ Con₀₁(L)} ∪ {∇}",
        check: hsum_square_con,
    },
    Theorem {
        id: "sandwich-con",
        summary: "Con_I(L ⊕ K ⊕ Lᵈ) = {α ⊕ β ⊕ α′}",
        check: sandwich_con,
    },
    Theorem {
        id: "filt-counts",
        summary: "filter counts of ⊕, B(·) and the step; every filter principal",
        check: filt_counts,
    },
    Theorem {
        id: "chain-convex",
        summary: "Con(Lₙ) is the convex partitions; Con_I(Lₘ ⊕ Lₘᵈ) has 2^(m−1) members",
        check: chain_convex,
    },
    Theorem {
        id: "finite-bound",
        summary: "|Con(L)| ≤ 2^(|L|−1), with equality exactly for chains",
        check: finite_bound,
    },
    Theorem {
        id: "coni01-equals-coni0",
        summary: "fixing {0, 1} in Con_I equals fixing {0}",
        check: coni01_equals_coni0,
    },
    Theorem {
        id: "mn-simple",
        summary: "Mₙ is simple; L₂ᵏ has 2ᵏ congruences",
        check: mn_simple,
    },
];

pub fn registry() -> &'static [Theorem] {
    REGISTRY
}

pub fn find(id: &str) -> Option<&'static Theorem> {
    REGISTRY.iter().find(|t| t.id == id)
}

pub fn run_all(corpus: &Corpus) -> Vec<Outcome> {
    REGISTRY.iter().map(|t| t.run(corpus)).collect()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn con(s: &Structure, sig: Signature) -> CongruenceSet {
    all_congruences(s, sig).expect("signature matches the structure")
}

fn lat(l: &FiniteLattice) -> Structure {
    Structure::Lattice(l.clone())
}

fn set(parts: impl IntoIterator<Item = Partition>) -> HashSet<Partition> {
    parts.into_iter().collect()
}

/// The partition of an `n`-element universe with `p`'s classes on the
/// image of `emb` and singletons elsewhere.
fn extend(n: usize, p: &Partition, emb: &[usize]) -> Partition {
    glue_partitions(n, &[(p, &emb.to_vec())])
}

fn signatures(s: &Structure) -> &'static [Signature] {
    if s.inv().is_some() {
        &[Signature::Lat, Signature::Ilat]
    } else {
        &[Signature::Lat]
    }
}

/// Seeded pairs of corpus lattices with at most 7 elements each.
pub fn corpus_pairs(corpus: &Corpus) -> Vec<(&Entry, &Entry)> {
    let small: Vec<&Entry> = corpus.all().filter(|e| e.structure.n() <= 7).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(PAIR_SEED);
    (0..PAIR_COUNT)
        .map(|_| {
            let a = small.choose(&mut rng).expect("corpus is nonempty");
            let b = small.choose(&mut rng).expect("corpus is nonempty");
            (*a, *b)
        })
        .collect()
}

fn oracle_equivalence(corpus: &Corpus) -> Result<usize, String> {
    let mut count = 0;
    for e in corpus.all().filter(|e| e.structure.n() <= DEFAULT_ORACLE_LIMIT) {
        for &sig in signatures(&e.structure) {
            let fast = con(&e.structure, sig);
            let slow = brute_force_congruences(&e.structure, sig, DEFAULT_ORACLE_LIMIT).map_err(|err| err.to_string())?;
            ensure!(fast == slow, "{} under {sig}: {} vs {} congruences", e.name, fast.len(), slow.len());
            count += 1;
        }
    }
    Ok(count)
}

fn osum_con_product(corpus: &Corpus) -> Result<usize, String> {
    for (a, b) in corpus_pairs(corpus) {
        let (l, m) = (a.structure.lattice(), b.structure.lattice());
        let w = ordinal_sum(l, m);
        let n = w.result.n();
        let (cl, cm, cs) = (con(&lat(l), Signature::Lat), con(&lat(m), Signature::Lat), con(&lat(&w.result), Signature::Lat));
        let mut image = Vec::new();
        for alpha in cl.iter() {
            for beta in cm.iter() {
                let p = glue_partitions(n, &[(alpha, &w.embeddings[0]), (beta, &w.embeddings[1])]);
                image.push((alpha, beta, p));
            }
        }
        let name = format!("{} ⊕ {}", a.name, b.name);
        let distinct = set(image.iter().map(|t| t.2.clone()));
        ensure!(distinct.len() == image.len(), "{name}: α ⊕ β is not injective");
        ensure!(distinct == cs.as_set(), "{name}: image differs from Con(L ⊕ M)");
        ensure!(cs.len() == cl.len() * cm.len(), "{name}: {} ≠ {}·{}", cs.len(), cl.len(), cm.len());
        for (a1, b1, p1) in &image {
            for (a2, b2, p2) in &image {
                let pair_le = a1.refines(a2) && b1.refines(b2);
                ensure!(pair_le == p1.refines(p2), "{name}: order not preserved at {p1} and {p2}");
            }
        }
    }
    Ok(PAIR_COUNT)
}

fn check_step_law(m: &Structure, variant: StepVariant, sig: Signature, name: &str) -> Result<(), String> {
    let w = step(m, variant).map_err(|e| e.to_string())?;
    let n = w.result.n();
    let base = con(m, sig);
    let got = con(&w.result, sig);
    let mut expected = set(base.iter().map(|t| extend(n, t, &w.embeddings[0])));
    expected.insert(Partition::total(n));
    ensure!(got.as_set() == expected, "{name}, {} step under {sig}: congruence sets differ", variant.name());
    ensure!(got.len() == base.len() + 1, "{name}, {} step under {sig}: {} ≠ {}+1", variant.name(), got.len(), base.len());
    Ok(())
}

fn bm_square_plus_one(corpus: &Corpus) -> Result<usize, String> {
    let mut count = 0;
    for e in corpus.all() {
        check_step_law(&e.structure.reduct(), StepVariant::Plain, Signature::Lat, &e.name)?;
        count += 1;
        if e.structure.inv().is_some() {
            for variant in [StepVariant::Kleene, StepVariant::Double3] {
                check_step_law(&e.structure, variant, Signature::Ilat, &e.name)?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn m4_swap() -> Structure {
    let b2 = Structure::Involution(boolean(2).expect("small"));
    horizontal_sum(&[b2.clone(), b2]).expect("nontrivial summands").result
}

fn tower_law(seed: &Structure, variant: StepVariant, sig: Signature) -> Result<usize, String> {
    let full = tower(seed, TOWER_STEPS, variant).map_err(|e| e.to_string())?;
    for k in 1..TOWER_STEPS {
        let t = tower(seed, k, variant).map_err(|e| e.to_string())?;
        ensure!(t.members() == &full.members()[..=k], "tower with {k} steps is not a prefix");
    }
    let n0 = seed.n();
    for (i, member) in full.members().iter().enumerate() {
        ensure!(member.n() == n0 + 4 * i, "member {i} has {} elements", member.n());
        let c = con(member, sig).len();
        ensure!(c == 2 + i, "member {i} has {c} congruences under {sig}");
    }
    let s = check_condition_s(&full, sig).map_err(|e| e.to_string())?;
    ensure!(s.holds(), "condition (s) under {sig}: {s}");
    let c = check_condition_c(&full, sig).map_err(|e| e.to_string())?;
    ensure!(c.holds(), "condition (c) under {sig}: {c}");
    Ok(full.len())
}

fn tower_count(_: &Corpus) -> Result<usize, String> {
    let m3 = lat(&m_lattice(3).expect("k >= 1"));
    let mut count = tower_law(&m3, StepVariant::Plain, Signature::Lat)?;
    let seed = m4_swap();
    count += tower_law(&seed, StepVariant::Kleene, Signature::Ilat)?;
    count += tower_law(&seed.reduct(), StepVariant::Plain, Signature::Lat)?;
    let t = tower(&seed, TOWER_STEPS, StepVariant::Kleene).map_err(|e| e.to_string())?;
    for (i, member) in t.members().iter().enumerate() {
        ensure!(
            con(member, Signature::Ilat).as_set() == con(member, Signature::Lat).as_set(),
            "member {i}: Con_I ≠ Con"
        );
    }
    Ok(count)
}

fn pk_preserved(corpus: &Corpus) -> Result<usize, String> {
    let t = tower(&m4_swap(), TOWER_STEPS, StepVariant::Kleene).map_err(|e| e.to_string())?;
    let mut count = 0;
    for (i, member) in t.members().iter().enumerate() {
        let v = member.involution().expect("kleene tower").is_pseudo_kleene();
        ensure!(v.holds(), "tower member {i}: ⓚ {v}");
        count += 1;
    }
    for e in corpus.with_involution() {
        let k = e.structure.involution().expect("filtered");
        if !k.is_pseudo_kleene().holds() {
            continue;
        }
        let w = step(&e.structure, StepVariant::Kleene).map_err(|e| e.to_string())?;
        let v = w.result.involution().expect("kleene step").is_pseudo_kleene();
        ensure!(v.holds(), "step of {}: ⓚ {v}", e.name);
        count += 1;
    }
    Ok(count)
}

fn pseudo_kleene_members(corpus: &Corpus, max_n: usize) -> Vec<(&str, &InvolutionLattice)> {
    corpus
        .with_involution()
        .filter_map(|e| e.structure.involution().map(|k| (e.name.as_str(), k)))
        .filter(|(_, k)| k.n() <= max_n && k.is_pseudo_kleene().holds())
        .collect()
}

fn aol_conbz(corpus: &Corpus) -> Result<usize, String> {
    let members = pseudo_kleene_members(corpus, 7);
    for (name, k) in &members {
        let w = aol_sandwich(k).map_err(|e| e.to_string())?;
        let a = Structure::Involution(w.result.clone());
        let n = a.n();
        let v = w.result.is_antiortholattice().map_err(|e| e.to_string())?;
        ensure!(v.holds(), "{name}: not an antiortholattice, {v}");
        let bz = con(&a, Signature::Bz);
        let fixed = con(&a, Signature::Ilat).fix_constants(&[a.lattice().bottom()]);
        let mut expected = fixed.as_set();
        expected.insert(Partition::total(n));
        ensure!(bz.as_set() == expected, "{name}: Con_BZ ≠ Con_I0 ∪ {{∇}}");
        let ck = con(&Structure::Involution((*k).clone()), Signature::Ilat);
        ensure!(bz.len() == ck.len() + 1, "{name}: {} ≠ {}+1", bz.len(), ck.len());
        let mut from_k = set(ck.iter().map(|b| extend(n, b, &w.embeddings[1])));
        from_k.insert(Partition::total(n));
        ensure!(bz.as_set() == from_k, "{name}: Con_BZ is not Con_I(K) extended by singletons");
    }
    Ok(members.len())
}

fn lld_simple(_: &Corpus) -> Result<usize, String> {
    let candidates = [
        ("bool(2)", boolean(2).expect("small").lattice().clone()),
        ("m(3)", m_lattice(3).expect("k >= 1")),
    ];
    for (name, l) in &candidates {
        ensure!(is_0_regular(l), "{name} is not 0-regular");
        let d = sandwich(l, None).result;
        let brouwer = trivial_brouwer(d.lattice());
        let a = d.with_brouwer(brouwer).map_err(|e| e.to_string())?;
        let v = a.is_antiortholattice().map_err(|e| e.to_string())?;
        ensure!(v.holds(), "{name} ⊕ dual: not an antiortholattice, {v}");
        let c = con(&Structure::Involution(a), Signature::Bz).len();
        ensure!(c == 2, "{name} ⊕ dual has {c} BZ-congruences");
    }
    Ok(candidates.len())
}

/// Every map satisfying the Brouwer axioms on `s`.
fn brouwer_maps(s: &InvolutionLattice) -> Vec<Vec<usize>> {
    let l = s.lattice();
    let n = l.n();
    let inv = s.inv();
    let mut out = Vec::new();
    let mut f = vec![0usize; n];
    loop {
        let valid = (0..n).all(|x| {
            l.meet(x, f[x]) == l.bottom()
                && f[f[x]] == inv[f[x]]
                && l.leq(x, f[f[x]])
                && (0..n).all(|y| !l.leq(x, y) || l.leq(f[y], f[x]))
        });
        if valid {
            out.push(f.clone());
        }
        let mut i = 0;
        while i < n && f[i] == n - 1 {
            f[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
        f[i] += 1;
    }
}

fn aol_trivial_brouwer(corpus: &Corpus) -> Result<usize, String> {
    let mut structures: Vec<(String, InvolutionLattice)> = corpus
        .with_involution()
        .filter_map(|e| e.structure.involution().map(|k| (e.name.clone(), k.clone().without_brouwer())))
        .filter(|(_, k)| k.n() <= BROUWER_SEARCH_MAX_N)
        .collect();
    for (name, k) in pseudo_kleene_members(corpus, BROUWER_SEARCH_MAX_N - 4) {
        let a = aol_sandwich(k).map_err(|e| e.to_string())?.result.without_brouwer();
        structures.push((format!("aol({name})"), a));
    }
    let mut count = 0;
    for (name, s) in &structures {
        let trivial = trivial_brouwer(s.lattice());
        for map in brouwer_maps(s) {
            let b = s.clone().with_brouwer(map.clone()).map_err(|e| format!("{name}: {e}"))?;
            if !b.is_pbz_star().expect("has Brouwer").holds() {
                continue;
            }
            let aol = b.is_antiortholattice().expect("has Brouwer").holds();
            ensure!(aol == (map == trivial), "{name} with ~ = {map:?}: antiortholattice is {aol}");
            count += 1;
        }
    }
    Ok(count)
}

fn check_hsum_law(l: &Structure, squares: &[Structure], sig: Signature, name: &str) -> Result<(), String> {
    let mut parts = vec![l.clone()];
    parts.extend_from_slice(squares);
    let w = horizontal_sum(&parts).map_err(|e| e.to_string())?;
    let n = w.result.n();
    let lat_l = l.lattice();
    let constants: &[usize] = match sig {
        Signature::Lat => &[lat_l.bottom(), lat_l.top()],
        _ => &[lat_l.bottom()],
    };
    let alphas = con(l, sig).fix_constants(constants);
    let mut expected = set(alphas.iter().map(|a| extend(n, a, &w.embeddings[0])));
    expected.insert(Partition::total(n));
    let got = con(&w.result, sig);
    ensure!(got.as_set() == expected, "{name} with {} extra summands under {sig}: sets differ", squares.len());
    Ok(())
}

fn hsum_square_con(corpus: &Corpus) -> Result<usize, String> {
    let b2 = Structure::Involution(boolean(2).expect("small"));
    let rc3 = Structure::Involution(reversed_chain(3).expect("n >= 1"));
    let mut count = 0;
    for e in corpus.all().filter(|e| e.structure.n() > 2) {
        check_hsum_law(&e.structure.reduct(), &[b2.reduct()], Signature::Lat, &e.name)?;
        count += 1;
        if e.structure.inv().is_some() {
            let s = Structure::Involution(e.structure.involution().expect("checked").clone().without_brouwer());
            check_hsum_law(&s, std::slice::from_ref(&b2), Signature::Ilat, &e.name)?;
            check_hsum_law(&s, &[rc3.clone(), rc3.clone()], Signature::Ilat, &e.name)?;
            count += 2;
        }
    }
    Ok(count)
}

fn sandwich_con(corpus: &Corpus) -> Result<usize, String> {
    let ls: Vec<&Entry> = corpus.all().filter(|e| e.structure.n() <= 5).collect();
    let unit = reversed_chain(1).expect("n = 1");
    let mut ks: Vec<(&str, Option<&InvolutionLattice>)> = vec![("unit", None)];
    ks.extend(
        corpus
            .with_involution()
            .filter(|e| e.structure.n() <= 4)
            .map(|e| (e.name.as_str(), e.structure.involution())),
    );
    let mut count = 0;
    for le in &ls {
        let l = le.structure.lattice();
        let cl = con(&lat(l), Signature::Lat);
        for (kname, k) in &ks {
            let w = sandwich(l, *k);
            let n = w.result.n();
            let k_alg = k.unwrap_or(&unit).clone().without_brouwer();
            let ck = con(&Structure::Involution(k_alg), Signature::Ilat);
            let mut expected = HashSet::new();
            for alpha in cl.iter() {
                for beta in ck.iter() {
                    expected.insert(glue_partitions(
                        n,
                        &[(alpha, &w.embeddings[0]), (beta, &w.embeddings[1]), (alpha, &w.embeddings[2])],
                    ));
                }
            }
            let got = con(&Structure::Involution(w.result), Signature::Ilat);
            let name = format!("sandwich({}, {kname})", le.name);
            ensure!(got.as_set() == expected, "{name}: congruence sets differ");
            ensure!(got.len() == cl.len() * ck.len(), "{name}: {} ≠ {}·{}", got.len(), cl.len(), ck.len());
            count += 1;
        }
    }
    Ok(count)
}

fn filter_count(l: &FiniteLattice) -> Result<usize, String> {
    l.filters_exhaustive(FILTER_LIMIT)
        .map(|f| f.len())
        .ok_or_else(|| format!("{} elements exceeds the filter enumeration limit", l.n()))
}

fn ideal_count(l: &FiniteLattice) -> Result<usize, String> {
    l.ideals_exhaustive(FILTER_LIMIT)
        .map(|f| f.len())
        .ok_or_else(|| format!("{} elements exceeds the ideal enumeration limit", l.n()))
}

fn all_principal(l: &FiniteLattice, name: &str) -> Result<usize, String> {
    let (f, i) = (filter_count(l)?, ideal_count(l)?);
    ensure!(f == l.n() && i == l.n(), "{name}: {f} filters, {i} ideals on {} elements", l.n());
    Ok(f)
}

fn filt_counts(corpus: &Corpus) -> Result<usize, String> {
    let mut count = 0;
    for (a, b) in corpus_pairs(corpus) {
        let (l, m) = (a.structure.lattice(), b.structure.lattice());
        let s = ordinal_sum(l, m).result;
        let (fl, fm, fs) = (filter_count(l)?, filter_count(m)?, filter_count(&s)?);
        ensure!(fs + 1 == fl + fm, "{} ⊕ {}: {fs} ≠ {fl}+{fm}−1", a.name, b.name);
        all_principal(&s, &format!("{} ⊕ {}", a.name, b.name))?;
        count += 1;
    }
    for e in corpus.all() {
        let l = e.structure.lattice();
        let fl = all_principal(l, &e.name)?;
        let bl = bound(&e.structure.reduct()).result;
        let fb = all_principal(bl.lattice(), &format!("bound({})", e.name))?;
        ensure!(fb == fl + 2, "bound({}): {fb} ≠ {fl}+2", e.name);
        let st = step(&e.structure.reduct(), StepVariant::Plain).map_err(|e| e.to_string())?.result;
        let fst = all_principal(st.lattice(), &format!("step({})", e.name))?;
        ensure!(fst == fl + 4, "step({}): {fst} ≠ {fl}+4", e.name);
        count += 1;
    }
    Ok(count)
}

/// Partitions of `0..n` into intervals, one per set of cut points.
pub fn convex_partitions(n: usize) -> HashSet<Partition> {
    let cuts = n.saturating_sub(1);
    (0u32..1 << cuts)
        .map(|mask| {
            let mut labels = Vec::with_capacity(n);
            let mut block = 0u32;
            for x in 0..n {
                if x > 0 && mask >> (x - 1) & 1 == 1 {
                    block += 1;
                }
                labels.push(block);
            }
            Partition::from_labels(&labels)
        })
        .collect()
}

fn chain_convex(_: &Corpus) -> Result<usize, String> {
    let mut count = 0;
    for n in 2..=12 {
        let c = con(&lat(&chain(n).expect("n >= 1")), Signature::Lat);
        ensure!(c.as_set() == convex_partitions(n), "chain({n}): congruences are not the convex partitions");
        ensure!(c.len() == 1 << (n - 1), "chain({n}): {} congruences", c.len());
        count += 1;
    }
    for m in 1..=6 {
        let lm = chain(m).expect("m >= 1");
        let s = Structure::Involution(sandwich(&lm, None).result);
        let ci = con(&s, Signature::Ilat).len();
        let cl = con(&lat(&lm), Signature::Lat).len();
        ensure!(ci == 1 << (m - 1) && ci == cl, "chain({m}) ⊕ dual: {ci} involution congruences, {cl} for chain({m})");
        let even = Structure::Involution(reversed_chain(2 * m).expect("n >= 1"));
        let ce = con(&even, Signature::Ilat).len();
        ensure!(ce == 1 << m, "chain({}) reversed: {ce} involution congruences", 2 * m);
        count += 1;
    }
    Ok(count)
}

fn finite_bound(corpus: &Corpus) -> Result<usize, String> {
    let mut count = 0;
    for e in corpus.all() {
        let l = e.structure.lattice();
        let c = con(&lat(l), Signature::Lat).len();
        let bound = 1usize << (l.n() - 1);
        ensure!(c <= bound, "{}: {c} > 2^{}", e.name, l.n() - 1);
        ensure!((c == bound) == l.is_chain(), "{}: {c} congruences, chain is {}", e.name, l.is_chain());
        count += 1;
    }
    Ok(count)
}

fn coni01_equals_coni0(corpus: &Corpus) -> Result<usize, String> {
    let mut count = 0;
    for e in corpus.with_involution() {
        let l = e.structure.lattice();
        let c = con(&e.structure, Signature::Ilat);
        let both = c.fix_constants(&[l.bottom(), l.top()]);
        let zero = c.fix_constants(&[l.bottom()]);
        ensure!(both == zero, "{}: {} vs {}", e.name, both.len(), zero.len());
        count += 1;
    }
    Ok(count)
}

fn mn_simple(_: &Corpus) -> Result<usize, String> {
    for k in 3..=8 {
        let c = con(&lat(&m_lattice(k).expect("k >= 1")), Signature::Lat).len();
        ensure!(c == 2, "m({k}) has {c} congruences");
    }
    for k in 1..=3 {
        let c = con(&lat(boolean(k).expect("small").lattice()), Signature::Lat).len();
        ensure!(c == 1 << k, "bool({k}) has {c} congruences");
    }
    Ok(9)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids = set_of_ids();
        assert_eq!(ids.len(), registry().len());
        assert!(find("tower-count").is_some());
        assert!(find("nope").is_none());
    }

    fn set_of_ids() -> HashSet<&'static str> {
        registry().iter().map(|t| t.id).collect()
    }

    #[test]
    fn convex_partition_counts() {
        assert_eq!(convex_partitions(1).len(), 1);
        assert_eq!(convex_partitions(4).len(), 8);
        assert!(convex_partitions(3).contains(&"0 1|2".parse().unwrap()));
        assert!(!convex_partitions(3).contains(&"0 2|1".parse().unwrap()));
    }

    #[test]
    fn brouwer_maps_of_the_square() {
        let b2 = boolean(2).unwrap();
        let maps = brouwer_maps(&b2);
        assert!(maps.contains(&b2.inv().to_vec()));
        assert!(maps.contains(&trivial_brouwer(b2.lattice())));
        assert_eq!(maps.len(), 2);
    }
}
