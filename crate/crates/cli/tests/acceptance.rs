//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach the terminal.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use lattica_core::corpus::Corpus;
use lattica_core::document::load_structure;
use lattica_core::theorems::find;
use lattica_core::{all_congruences, brute_force_congruences, is_isomorphic, Signature};

type Check = fn(&Corpus) -> Result<String, String>;

fn registered(corpus: &Corpus, ids: &[&str]) -> Result<String, String> {
    let mut parts = Vec::new();
    for id in ids {
        let t = find(id).ok_or_else(|| format!("{id} is not registered"))?;
        let o = t.run(corpus);
        if let Some(f) = o.failure {
            return Err(format!("{id}: {f}"));
        }
        parts.push(format!("{id} {} instances", o.instances));
    }
    Ok(parts.join(", "))
}

fn timed(limit: Duration, f: impl FnOnce() -> Result<String, String>) -> Result<String, String> {
    let start = Instant::now();
    let detail = f()?;
    let took = start.elapsed();
    if took >= limit {
        return Err(format!("{detail}; took {took:.2?}, limit {limit:?}"));
    }
    Ok(format!("{detail}; {took:.2?}"))
}

fn c1(corpus: &Corpus) -> Result<String, String> {
    timed(Duration::from_secs(60), || {
        let mut compared = 0;
        for e in &corpus.base {
            let mut sigs = vec![Signature::Lat];
            if e.structure.inv().is_some() {
                sigs.push(Signature::Ilat);
            }
            for sig in sigs {
                let fast = all_congruences(&e.structure, sig).map_err(|x| x.to_string())?;
                let slow = brute_force_congruences(&e.structure, sig, 8).map_err(|x| x.to_string())?;
                if fast != slow {
                    return Err(format!("{} under {sig}: {} vs {}", e.name, fast.len(), slow.len()));
                }
                compared += 1;
            }
        }
        Ok(format!("{} structures, {compared} comparisons", corpus.base.len()))
    })
}

fn c2(corpus: &Corpus) -> Result<String, String> {
    registered(corpus, &["osum-con-product"])
}

fn c3(corpus: &Corpus) -> Result<String, String> {
    registered(corpus, &["bM-square-plus-one"])
}

fn c4(corpus: &Corpus) -> Result<String, String> {
    timed(Duration::from_secs(120), || registered(corpus, &["tower-count", "pk-preserved"]))
}

fn c5(corpus: &Corpus) -> Result<String, String> {
    registered(corpus, &["mn-simple", "finite-bound"])
}

fn c6(corpus: &Corpus) -> Result<String, String> {
    registered(corpus, &["chain-convex"])
}

fn c7(corpus: &Corpus) -> Result<String, String> {
    registered(corpus, &["aol-conbz", "lld-simple"])
}

fn c8(corpus: &Corpus) -> Result<String, String> {
    registered(corpus, &["hsum-square-con"])
}

fn c9(corpus: &Corpus) -> Result<String, String> {
    registered(corpus, &["coni01-equals-coni0"])
}

fn c10(corpus: &Corpus) -> Result<String, String> {
    registered(corpus, &["filt-counts"])
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn lattica(args: &[&str]) -> Result<(String, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_lattica"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok((stdout, out.status.code().unwrap_or(-1)))
}

fn c11(_: &Corpus) -> Result<String, String> {
    let (out, code) = lattica(&["verify", "all"])?;
    if code != 0 {
        return Err(format!("verify all exited {code}:\n{out}"));
    }
    let json = [
        ("sandwich(chain(2), bool(2))", "sandwich_chain2_bool2.json"),
        ("aol(bool(2))", "aol_bool2.json"),
        ("tower(m(3), 1, plain)", "tower_m3_1.json"),
    ];
    for (expr, file) in json {
        let expected = std::fs::read_to_string(golden(file)).map_err(|e| e.to_string())?;
        let (text, _) = lattica(&["eval", "--expr", expr])?;
        if text != expected {
            return Err(format!("eval {expr} differs from {file}"));
        }
        let path = golden(file);
        let (again, _) = lattica(&["eval", "--file", path.to_str().expect("utf-8 path")])?;
        if again != expected {
            return Err(format!("{file} does not round-trip"));
        }
        let s = load_structure(&text).map_err(|e| e.to_string())?;
        let map = is_isomorphic(s.lattice(), s.lattice()).ok_or("no isomorphism")?;
        if map != (0..s.n()).collect::<Vec<_>>() {
            return Err(format!("{file}: isomorphism is not the identity"));
        }
    }
    let dot = [
        ("osum(bool(2), chain(3))", "osum_bool2_chain3.dot"),
        ("hsum(bool(2), bool(2))", "hsum_bool2_bool2.dot"),
    ];
    for (expr, file) in dot {
        let expected = std::fs::read_to_string(golden(file)).map_err(|e| e.to_string())?;
        let (text, _) = lattica(&["dot", "--expr", expr])?;
        if text != expected {
            return Err(format!("dot {expr} differs from {file}"));
        }
        let (doc, _) = lattica(&["eval", "--expr", expr])?;
        let s = load_structure(&doc).map_err(|e| e.to_string())?;
        let solid: Vec<(usize, usize)> = text
            .lines()
            .filter(|l| l.contains("->") && !l.contains("dashed"))
            .map(|l| {
                let l = l.trim().trim_end_matches(';');
                let (a, b) = l.split_once(" -> ").expect("edge line");
                (a[1..].parse().expect("node"), b[1..].parse().expect("node"))
            })
            .collect();
        if solid != s.lattice().covers() {
            return Err(format!("{file}: solid edges are not the cover relation"));
        }
        if !text.starts_with("digraph lattice {\n") || !text.ends_with("}\n") {
            return Err(format!("{file}: not a digraph"));
        }
    }
    Ok(format!("verify all exit 0, {} JSON and {} DOT goldens", json.len(), dot.len()))
}

fn main() -> ExitCode {
    let corpus = Corpus::standard();
    let criteria: [(&str, &str, Check); 11] = [
        ("1", "oracle equivalence", c1),
        ("2", "ordinal-sum product law", c2),
        ("3", "step law", c3),
        ("4", "tower law", c4),
        ("5", "simplicity and the 2^(n-1) bound", c5),
        ("6", "chains and convex partitions", c6),
        ("7", "antiortholattice laws", c7),
        ("8", "horizontal-square law", c8),
        ("9", "bi-lattice constant law", c9),
        ("10", "filter counts", c10),
        ("11", "CLI contract", c11),
    ];
    let mut failed = 0;
    for (num, title, check) in criteria {
        match check(&corpus) {
            Ok(detail) => println!("PASS criterion {num:>2} {title}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {num:>2} {title}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
