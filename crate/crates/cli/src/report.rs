//! Command reports, as aligned text or single-line JSON.

use std::fmt::Write;

use lattica_core::{Structure, TaxonomyReport};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub n: usize,
    pub bottom: usize,
    pub top: usize,
    pub involution: bool,
    pub brouwer: bool,
}

impl Summary {
    pub fn of(s: &Structure) -> Self {
        let l = s.lattice();
        Summary {
            n: l.n(),
            bottom: l.bottom(),
            top: l.top(),
            involution: s.inv().is_some(),
            brouwer: s.brouwer().is_some(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CongruenceReport {
    pub signature: &'static str,
    pub fix: Option<&'static str>,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub listing: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MemberReport {
    pub index: usize,
    pub n: usize,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub id: &'static str,
    pub holds: bool,
    pub instances: usize,
    pub witness: Option<String>,
}

impl VerdictReport {
    pub fn line(&self) -> String {
        match &self.witness {
            None => format!("PASS {} ({} instances)\n", self.id, self.instances),
            Some(w) => format!("FAIL {}: {w}\n", self.id),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub structure: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub congruences: Vec<CongruenceReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub members: Vec<MemberReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub taxonomy: Option<TaxonomyReport>,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Report {
    pub fn new(structure: Summary) -> Self {
        Report {
            structure,
            congruences: Vec::new(),
            members: Vec::new(),
            taxonomy: None,
        }
    }

    fn header(&self, out: &mut String) {
        let s = &self.structure;
        writeln!(out, "n: {}", s.n).unwrap();
        writeln!(out, "bounds: {} {}", s.bottom, s.top).unwrap();
    }

    pub fn render_con(&self) -> String {
        let mut out = String::new();
        self.header(&mut out);
        for c in &self.congruences {
            let fix = c.fix.map(|f| format!(" fix {f}")).unwrap_or_default();
            writeln!(out, "signature: {}{fix}", c.signature).unwrap();
            writeln!(out, "congruences: {}", c.count).unwrap();
            for p in c.listing.iter().flatten() {
                writeln!(out, "  {p}").unwrap();
            }
        }
        for m in &self.members {
            writeln!(out, "member {}: n={} congruences={}", m.index, m.n, m.count).unwrap();
        }
        out
    }

    pub fn render_classify(&self) -> String {
        let mut out = String::new();
        self.header(&mut out);
        let Some(t) = &self.taxonomy else {
            return out;
        };
        let flags = [
            ("bounded", t.bounded),
            ("distributive", t.distributive),
            ("modular", t.modular),
            ("i_lattice", t.i_lattice),
            ("bi_lattice", t.bi_lattice),
            ("pseudo_kleene", t.pseudo_kleene),
            ("de_morgan", t.de_morgan),
            ("kleene", t.kleene),
            ("paraorthomodular", t.paraorthomodular),
            ("bz", t.bz),
            ("pbz_star", t.pbz_star),
            ("antiortholattice", t.antiortholattice),
        ];
        for (name, value) in flags {
            write!(out, "{name}: {}", yes(value)).unwrap();
            if let Some((_, w)) = t.witnesses.iter().find(|(k, _)| k == name) {
                let w: Vec<String> = w.iter().map(ToString::to_string).collect();
                write!(out, " (witness {})", w.join(" ")).unwrap();
            }
            out.push('\n');
        }
        out
    }
}
