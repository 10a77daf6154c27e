use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// The transitive permutation groups of degree one through five.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaloisGroup {
    C1,
    S2,
    A3,
    S3,
    V,
    C4,
    D8,
    A4,
    S4,
    C5,
    D10,
    F20,
    A5,
    S5,
}

/// A permutation of `0..n` in image form.
type Perm = Vec<usize>;

fn cycle(n: usize, cyc: &[usize]) -> Perm {
    let mut p: Perm = (0..n).collect();
    for (i, &a) in cyc.iter().enumerate() {
        p[a] = cyc[(i + 1) % cyc.len()];
    }
    p
}

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

fn cycle_type(p: &Perm) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

impl GaloisGroup {
    pub const ALL: [GaloisGroup; 14] = [
        GaloisGroup::C1,
        GaloisGroup::S2,
        GaloisGroup::A3,
        GaloisGroup::S3,
        GaloisGroup::V,
        GaloisGroup::C4,
        GaloisGroup::D8,
        GaloisGroup::A4,
        GaloisGroup::S4,
        GaloisGroup::C5,
        GaloisGroup::D10,
        GaloisGroup::F20,
        GaloisGroup::A5,
        GaloisGroup::S5,
    ];

    pub fn degree(self) -> usize {
        use GaloisGroup::*;
        match self {
            C1 => 1,
            S2 => 2,
            A3 | S3 => 3,
            V | C4 | D8 | A4 | S4 => 4,
            C5 | D10 | F20 | A5 | S5 => 5,
        }
    }

    pub fn order(self) -> usize {
        use GaloisGroup::*;
        match self {
            C1 => 1,
            S2 => 2,
            A3 => 3,
            S3 => 6,
            V | C4 => 4,
            D8 => 8,
            A4 => 12,
            S4 => 24,
            C5 => 5,
            D10 => 10,
            F20 => 20,
            A5 => 60,
            S5 => 120,
        }
    }

    /// Whether the group lies in the alternating group, which happens
    /// exactly when the discriminant is a square.
    pub fn is_even(self) -> bool {
        use GaloisGroup::*;
        matches!(self, C1 | A3 | V | A4 | C5 | D10 | A5)
    }

    pub fn description(self) -> &'static str {
        use GaloisGroup::*;
        match self {
            C1 => "trivial group",
            S2 => "symmetric of order 2",
            A3 => "cyclic of order 3",
            S3 => "symmetric of order 6",
            V => "Klein four-group",
            C4 => "cyclic of order 4",
            D8 => "dihedral of order 8",
            A4 => "alternating of order 12",
            S4 => "symmetric of order 24",
            C5 => "cyclic of order 5",
            D10 => "dihedral of order 10",
            F20 => "Frobenius of order 20",
            A5 => "alternating of order 60",
            S5 => "symmetric of order 120",
        }
    }

    /// Generators of a concrete copy of the group acting on `0..degree`.
    fn generators(self) -> Vec<Perm> {
        use GaloisGroup::*;
        let n = self.degree();
        let c = |cycles: &[&[usize]]| {
            cycles
                .iter()
                .fold((0..n).collect::<Perm>(), |acc, cyc| compose(&acc, &cycle(n, cyc)))
        };
        match self {
            C1 => vec![c(&[])],
            S2 => vec![c(&[&[0, 1]])],
            A3 => vec![c(&[&[0, 1, 2]])],
            S3 => vec![c(&[&[0, 1, 2]]), c(&[&[0, 1]])],
            V => vec![c(&[&[0, 1], &[2, 3]]), c(&[&[0, 2], &[1, 3]])],
            C4 => vec![c(&[&[0, 1, 2, 3]])],
            D8 => vec![c(&[&[0, 1, 2, 3]]), c(&[&[0, 2]])],
            A4 => vec![c(&[&[0, 1, 2]]), c(&[&[0, 1], &[2, 3]])],
            S4 => vec![c(&[&[0, 1, 2, 3]]), c(&[&[0, 1]])],
            C5 => vec![c(&[&[0, 1, 2, 3, 4]])],
            D10 => vec![c(&[&[0, 1, 2, 3, 4]]), c(&[&[1, 4], &[2, 3]])],
            F20 => vec![c(&[&[0, 1, 2, 3, 4]]), c(&[&[1, 2, 4, 3]])],
            A5 => vec![c(&[&[0, 1, 2, 3, 4]]), c(&[&[0, 1, 2]])],
            S5 => vec![c(&[&[0, 1, 2, 3, 4]]), c(&[&[0, 1]])],
        }
    }

    /// Every element, by closing the generators under composition.
    pub fn elements(self) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let id: Perm = (0..self.degree()).collect();
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for h in &gens {
                let gh = compose(&g, h);
                if seen.insert(gh.clone()) {
                    queue.push_back(gh);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The cycle types occurring in the group, each sorted descending.
    pub fn cycle_types(self) -> BTreeSet<Vec<usize>> {
        self.elements().iter().map(cycle_type).collect()
    }
}

impl fmt::Display for GaloisGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for GaloisGroup {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GaloisGroup::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown group {s:?}"))
    }
}
