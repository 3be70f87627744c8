use std::fmt;

/// Outcome of an exhaustive law check. A failure carries the first
/// counterexample tuple found in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Vec<usize>),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    /// Runs `check` over candidates in order and fails at the first rejected one.
    pub(crate) fn first_failure<I, F>(candidates: I, mut check: F) -> Verdict
    where
        I: IntoIterator<Item = Vec<usize>>,
        F: FnMut(&[usize]) -> bool,
    {
        for c in candidates {
            if !check(&c) {
                return Verdict::Fails(c);
            }
        }
        Verdict::Holds
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails(w) => {
                let parts: Vec<String> = w.iter().map(usize::to_string).collect();
                write!(f, "fails at ({})", parts.join(", "))
            }
        }
    }
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |a| (0..n).map(move |b| vec![a, b]))
}

pub(crate) fn triples(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| vec![a, b, c])))
}
