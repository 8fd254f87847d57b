//! Separating trees, inflation, and membership in `X` and `X[U]`.
//!
//! A separable permutation is built from single points by direct and skew
//! sums. Its canonical separating tree alternates node kinds: the children of
//! a sum node are the sum components, each of which is a leaf or a skew node,
//! and dually.

use std::fmt;
use std::str::FromStr;

use crate::engine::USpec;
use crate::error::{Error, Result};
use crate::perm::{contains, direct_sum, skew_sum, Permutation};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SeparatingTree {
    Leaf,
    Sum(Vec<SeparatingTree>),
    Skew(Vec<SeparatingTree>),
}

impl SeparatingTree {
    /// The canonical tree of `pi`, or `None` when `pi` is not separable.
    pub fn build(pi: &Permutation) -> Result<Option<SeparatingTree>> {
        if pi.is_empty() {
            return Err(Error::EmptyPermutation("build_tree"));
        }
        Ok(build_nonempty(pi))
    }

    /// Number of leaves, which equals the length of the represented
    /// permutation.
    pub fn size(&self) -> usize {
        match self {
            SeparatingTree::Leaf => 1,
            SeparatingTree::Sum(c) | SeparatingTree::Skew(c) => c.iter().map(Self::size).sum(),
        }
    }

    pub fn to_permutation(&self) -> Permutation {
        match self {
            SeparatingTree::Leaf => Permutation::point(),
            SeparatingTree::Sum(c) => c.iter().fold(Permutation::empty(), |acc, t| {
                direct_sum(&acc, &t.to_permutation())
            }),
            SeparatingTree::Skew(c) => c.iter().fold(Permutation::empty(), |acc, t| {
                skew_sum(&acc, &t.to_permutation())
            }),
        }
    }

    /// Checks the alternation invariant and internal arity.
    pub fn is_canonical(&self) -> bool {
        match self {
            SeparatingTree::Leaf => true,
            SeparatingTree::Sum(c) => {
                c.len() >= 2
                    && c.iter()
                        .all(|t| !matches!(t, SeparatingTree::Sum(_)) && t.is_canonical())
            }
            SeparatingTree::Skew(c) => {
                c.len() >= 2
                    && c.iter()
                        .all(|t| !matches!(t, SeparatingTree::Skew(_)) && t.is_canonical())
            }
        }
    }

    /// Merges same-kind nested nodes and unwraps single-child nodes.
    pub fn canonicalize(self) -> SeparatingTree {
        fn flatten(kind_sum: bool, children: Vec<SeparatingTree>) -> Vec<SeparatingTree> {
            let mut out = Vec::new();
            for c in children.into_iter().map(SeparatingTree::canonicalize) {
                match c {
                    SeparatingTree::Sum(g) if kind_sum => out.extend(g),
                    SeparatingTree::Skew(g) if !kind_sum => out.extend(g),
                    other => out.push(other),
                }
            }
            out
        }
        match self {
            SeparatingTree::Leaf => SeparatingTree::Leaf,
            SeparatingTree::Sum(c) => {
                let mut c = flatten(true, c);
                if c.len() == 1 {
                    c.pop().unwrap()
                } else {
                    SeparatingTree::Sum(c)
                }
            }
            SeparatingTree::Skew(c) => {
                let mut c = flatten(false, c);
                if c.len() == 1 {
                    c.pop().unwrap()
                } else {
                    SeparatingTree::Skew(c)
                }
            }
        }
    }
}

fn build_nonempty(pi: &Permutation) -> Option<SeparatingTree> {
    if pi.len() == 1 {
        return Some(SeparatingTree::Leaf);
    }
    let sums = pi.sum_components().expect("nonempty");
    if sums.len() >= 2 {
        return sums
            .iter()
            .map(build_nonempty)
            .collect::<Option<Vec<_>>>()
            .map(SeparatingTree::Sum);
    }
    let skews = pi.skew_components().expect("nonempty");
    if skews.len() >= 2 {
        return skews
            .iter()
            .map(build_nonempty)
            .collect::<Option<Vec<_>>>()
            .map(SeparatingTree::Skew);
    }
    None
}

/// Nested bracket text: `1` for a leaf, `+(a, b, …)` for a sum node and
/// `-(a, b, …)` for a skew node. `+(1, -(1, 1))` is `132`.
impl fmt::Display for SeparatingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sign, children) = match self {
            SeparatingTree::Leaf => return f.write_str("1"),
            SeparatingTree::Sum(c) => ('+', c),
            SeparatingTree::Skew(c) => ('-', c),
        };
        write!(f, "{sign}(")?;
        for (i, c) in children.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for SeparatingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeparatingTree({self})")
    }
}

impl FromStr for SeparatingTree {
    type Err = Error;

    /// Parses bracket text and canonicalizes it.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!(
                "trailing input in tree `{s}` at {pos}"
            )));
        }
        Ok(tree.canonicalize())
    }
}

fn parse_tree(chars: &[char], pos: &mut usize) -> Result<SeparatingTree> {
    let err = |msg: &str, at: usize| Error::Parse(format!("{msg} at offset {at}"));
    match chars.get(*pos) {
        Some('1') => {
            *pos += 1;
            Ok(SeparatingTree::Leaf)
        }
        Some(&sign @ ('+' | '-')) => {
            *pos += 1;
            if chars.get(*pos) != Some(&'(') {
                return Err(err("expected `(`", *pos));
            }
            *pos += 1;
            let mut children = vec![parse_tree(chars, pos)?];
            loop {
                match chars.get(*pos) {
                    Some(',') => {
                        *pos += 1;
                        children.push(parse_tree(chars, pos)?);
                    }
                    Some(')') => {
                        *pos += 1;
                        break;
                    }
                    _ => return Err(err("expected `,` or `)`", *pos)),
                }
            }
            Ok(if sign == '+' {
                SeparatingTree::Sum(children)
            } else {
                SeparatingTree::Skew(children)
            })
        }
        _ => Err(err("expected `1`, `+(` or `-(`", *pos)),
    }
}

/// `buildTree`: the canonical separating tree, `None` if not separable.
pub fn build_tree(pi: &Permutation) -> Result<Option<SeparatingTree>> {
    SeparatingTree::build(pi)
}

/// Separable iff the recursive decomposition reaches single points. The empty
/// permutation counts as separable.
pub fn is_separable(pi: &Permutation) -> bool {
    pi.is_empty() || build_nonempty(pi).is_some()
}

/// Replaces point `i` of `pi` by a block order-isomorphic to `parts[i]`.
pub fn inflate(pi: &Permutation, parts: &[Permutation]) -> Result<Permutation> {
    if parts.len() != pi.len() {
        return Err(Error::InflationArity {
            points: pi.len(),
            parts: parts.len(),
        });
    }
    if let Some(i) = parts.iter().position(Permutation::is_empty) {
        return Err(Error::EmptyInflationPart(i));
    }
    // offset[v] = total size of the blocks inflating values below v.
    let mut by_value = vec![0usize; pi.len() + 1];
    for (i, &v) in pi.values().iter().enumerate() {
        by_value[v as usize] = parts[i].len();
    }
    let mut offset = vec![0u32; pi.len() + 1];
    for v in 1..=pi.len() {
        offset[v] = if v == 1 {
            0
        } else {
            offset[v - 1] + by_value[v - 1] as u32
        };
    }
    let values = pi
        .values()
        .iter()
        .zip(parts)
        .flat_map(|(&v, part)| {
            let base = offset[v as usize];
            part.values().iter().map(move |&w| w + base)
        })
        .collect();
    Ok(Permutation::from_values_unchecked(values))
}

/// Basis of `X`, the separable skew-merged permutations.
pub fn x_basis() -> [Permutation; 4] {
    ["2143", "2413", "3142", "3412"].map(|s| s.parse().expect("valid"))
}

pub fn is_in_x(pi: &Permutation) -> bool {
    x_basis().iter().all(|b| !contains(pi, b))
}

/// Membership in the inflation `X[U]`.
///
/// `pi ∈ X[U]` iff `pi ∈ U`, or `pi` splits as `γ ⊕ τ` or `γ ⊖ τ` (both
/// nonempty) with one side in `U` and the other in `X[U]`. Subproblems are
/// contiguous position windows of `pi`, memoized per call.
pub fn is_in_x_inflation(pi: &Permutation, u: &USpec) -> bool {
    if pi.is_empty() {
        return false;
    }
    InflationMemo::new(pi, u).in_xu(0, pi.len())
}

struct InflationMemo<'a> {
    values: &'a [u32],
    u: &'a USpec,
    n: usize,
    in_u: Vec<Option<bool>>,
    in_xu: Vec<Option<bool>>,
}

impl<'a> InflationMemo<'a> {
    fn new(pi: &'a Permutation, u: &'a USpec) -> Self {
        let n = pi.len();
        InflationMemo {
            values: pi.values(),
            u,
            n,
            in_u: vec![None; (n + 1) * (n + 1)],
            in_xu: vec![None; (n + 1) * (n + 1)],
        }
    }

    fn key(&self, i: usize, j: usize) -> usize {
        i * (self.n + 1) + j
    }

    fn in_u(&mut self, i: usize, j: usize) -> bool {
        let k = self.key(i, j);
        if let Some(b) = self.in_u[k] {
            return b;
        }
        let w = &self.values[i..j];
        let b = match self.u {
            USpec::Trivial => j - i == 1,
            USpec::Increasing => w.windows(2).all(|p| p[0] < p[1]),
            USpec::Decreasing => w.windows(2).all(|p| p[0] > p[1]),
            USpec::FiniteSet(_) => self.u.contains(&Permutation::standardize(w)),
        };
        self.in_u[k] = Some(b);
        b
    }

    fn in_xu(&mut self, i: usize, j: usize) -> bool {
        let k = self.key(i, j);
        if let Some(b) = self.in_xu[k] {
            return b;
        }
        let b = self.compute(i, j);
        self.in_xu[k] = Some(b);
        b
    }

    fn compute(&mut self, i: usize, j: usize) -> bool {
        if self.in_u(i, j) {
            return true;
        }
        // prefix max/min for split tests
        let w = &self.values[i..j];
        let len = w.len();
        let mut suffix_min = vec![u32::MAX; len + 1];
        let mut suffix_max = vec![0u32; len + 1];
        for t in (0..len).rev() {
            suffix_min[t] = suffix_min[t + 1].min(w[t]);
            suffix_max[t] = suffix_max[t + 1].max(w[t]);
        }
        let mut pmax = 0u32;
        let mut pmin = u32::MAX;
        for t in 1..len {
            pmax = pmax.max(w[t - 1]);
            pmin = pmin.min(w[t - 1]);
            let cut = i + t;
            let sum_split = pmax < suffix_min[t];
            let skew_split = pmin > suffix_max[t];
            if (sum_split || skew_split)
                && ((self.in_u(i, cut) && self.in_xu(cut, j))
                    || (self.in_xu(i, cut) && self.in_u(cut, j)))
            {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn tree_examples() {
        assert_eq!(build_tree(&p("2413")).unwrap(), None);
        assert_eq!(build_tree(&p("1")).unwrap(), Some(SeparatingTree::Leaf));
        let t = build_tree(&p("7253461")).unwrap().unwrap();
        assert_eq!(t.to_permutation(), p("7253461"));
        assert!(t.is_canonical());
        assert_eq!(
            build_tree(&p("132")).unwrap().unwrap().to_string(),
            "+(1, -(1, 1))"
        );
        assert!(matches!(
            build_tree(&Permutation::empty()),
            Err(Error::EmptyPermutation(_))
        ));
    }

    #[test]
    fn tree_text_roundtrip() {
        let t: SeparatingTree = "+(1, -(1, 1))".parse().unwrap();
        assert_eq!(t.to_permutation(), p("132"));
        // Nested same-kind nodes merge on parse.
        let t: SeparatingTree = "+(+(1, 1), 1)".parse().unwrap();
        assert_eq!(t.to_string(), "+(1, 1, 1)");
        assert!("+(1".parse::<SeparatingTree>().is_err());
        assert!("2".parse::<SeparatingTree>().is_err());
        assert!("-(1, 1))".parse::<SeparatingTree>().is_err());
    }

    #[test]
    fn separability() {
        assert!(!is_separable(&p("3142")));
        assert!(is_separable(&Permutation::empty()));
        for n in 0..=3 {
            assert!(Permutation::all(n).all(|pi| is_separable(&pi)));
        }
        assert_eq!(Permutation::all(4).filter(is_separable).count(), 22);
    }

    #[test]
    fn exhaustive_tree_and_basis_agreement() {
        let basis = [p("2413"), p("3142")];
        for n in 1..=7 {
            for pi in Permutation::all(n) {
                let tree = build_tree(&pi).unwrap();
                assert_eq!(tree.is_some(), pi.avoids_all(&basis), "{pi}");
                if let Some(t) = tree {
                    assert!(t.is_canonical());
                    assert_eq!(t.size(), n);
                    assert_eq!(t.to_permutation(), pi);
                    assert_eq!(t.to_string().parse::<SeparatingTree>().unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn inflation_examples() {
        assert_eq!(inflate(&p("1"), &[p("2413")]).unwrap(), p("2413"));
        assert_eq!(inflate(&p("21"), &[p("12"), p("1")]).unwrap(), p("231"));
        assert_eq!(inflate(&p("12"), &[p("1"), p("1")]).unwrap(), p("12"));
        assert_eq!(
            inflate(&p("231"), &[p("21"), p("1"), p("12")]).unwrap(),
            p("43512")
        );
        assert_eq!(
            inflate(&p("12"), &[p("1")]),
            Err(Error::InflationArity {
                points: 2,
                parts: 1
            })
        );
        assert_eq!(
            inflate(&p("12"), &[p("1"), Permutation::empty()]),
            Err(Error::EmptyInflationPart(1))
        );
        for n in 1..=5 {
            for pi in Permutation::all(n) {
                assert_eq!(inflate(&pi, &vec![Permutation::point(); n]).unwrap(), pi);
            }
        }
    }

    #[test]
    fn x_membership() {
        assert!(is_in_x(&p("7253461")));
        assert!(!is_in_x(&p("2143")));
        assert_eq!(Permutation::all(4).filter(is_in_x).count(), 20);
    }

    #[test]
    fn trivial_inflation_is_x() {
        assert!(!is_in_x_inflation(&p("2143"), &USpec::Trivial));
        for n in 1..=8 {
            for pi in Permutation::all(n) {
                assert_eq!(
                    is_in_x_inflation(&pi, &USpec::Trivial),
                    is_in_x(&pi),
                    "{pi}"
                );
            }
        }
    }

    fn test_us() -> Vec<USpec> {
        let (cl231, _) = USpec::finite_closure([&p("231")]).unwrap();
        let (cl2413, _) = USpec::finite_closure([&p("2413")]).unwrap();
        vec![
            USpec::Trivial,
            USpec::Increasing,
            USpec::Decreasing,
            cl231,
            cl2413,
        ]
    }

    /// Oracle: generate `X[U]` literally by inflating members of `X` with
    /// members of `U`, up to length `max_n`.
    fn inflation_oracle(u: &USpec, max_n: usize) -> BTreeSet<Permutation> {
        let mut u_members: Vec<Permutation> = Vec::new();
        for len in 1..=max_n {
            u_members.extend(u.members_of_len(len));
        }
        let mut out = BTreeSet::new();
        for k in 1..=max_n {
            let skeletons: Vec<Permutation> = Permutation::all(k).filter(is_in_x).collect();
            // every assignment of U members to the k points with total length <= max_n
            let mut stack: Vec<Vec<usize>> = vec![vec![]];
            while let Some(choice) = stack.pop() {
                let used: usize = choice.iter().map(|&i| u_members[i].len()).sum();
                if choice.len() == k {
                    let parts: Vec<Permutation> =
                        choice.iter().map(|&i| u_members[i].clone()).collect();
                    for sk in &skeletons {
                        out.insert(inflate(sk, &parts).unwrap());
                    }
                    continue;
                }
                let remaining_points = k - choice.len() - 1;
                for (i, m) in u_members.iter().enumerate() {
                    if used + m.len() + remaining_points <= max_n {
                        let mut next = choice.clone();
                        next.push(i);
                        stack.push(next);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn recursive_membership_matches_literal_inflation() {
        for u in test_us() {
            let oracle = inflation_oracle(&u, 7);
            for n in 1..=7 {
                for pi in Permutation::all(n) {
                    assert_eq!(
                        is_in_x_inflation(&pi, &u),
                        oracle.contains(&pi),
                        "U={u} pi={pi}"
                    );
                }
            }
        }
    }

    #[test]
    fn inflation_class_is_downward_closed() {
        for u in test_us() {
            for n in 2..=7 {
                for pi in Permutation::all(n).filter(|pi| is_in_x_inflation(pi, &u)) {
                    for q in pi.one_point_deletions() {
                        assert!(is_in_x_inflation(&q, &u), "U={u} pi={pi} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn members_of_u_are_in_inflation() {
        for u in test_us() {
            for n in 1..=6 {
                for m in u.members_of_len(n) {
                    assert!(is_in_x_inflation(&m, &u));
                }
            }
        }
    }
}
