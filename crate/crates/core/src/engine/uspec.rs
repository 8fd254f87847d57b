use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{closure, Permutation};

/// The class `U` whose members inflate the points of an X-class permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum USpec {
    /// The class `{1}`; `X[U]` is then `X` itself.
    Trivial,
    /// `Av(21)`.
    Increasing,
    /// `Av(12)`.
    Decreasing,
    /// An explicit nonempty downward-closed finite set.
    FiniteSet(FiniteClass),
}

/// A nonempty, downward-closed, finite set of nonempty permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteClass {
    members: BTreeSet<Permutation>,
    lookup: HashSet<Permutation>,
}

impl FiniteClass {
    pub fn members(&self) -> &BTreeSet<Permutation> {
        &self.members
    }

    pub fn contains(&self, pi: &Permutation) -> bool {
        self.lookup.contains(pi)
    }

    pub fn max_len(&self) -> usize {
        self.members.iter().map(Permutation::len).max().unwrap_or(0)
    }
}

impl USpec {
    /// A finite class from a set that must already be downward closed.
    pub fn finite<'a, I>(members: I) -> Result<USpec>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let given: BTreeSet<Permutation> = members
            .into_iter()
            .filter(|p| !p.is_empty())
            .cloned()
            .collect();
        let closed = closure(&given);
        if closed != given {
            let missing = closed
                .difference(&given)
                .next()
                .expect("closure adds something");
            return Err(Error::InvalidSpec(format!(
                "finite U is not downward closed (missing {missing})"
            )));
        }
        USpec::from_closed(given)
    }

    /// A finite class generated by `members`, completing the downward
    /// closure. The flag reports whether anything had to be added.
    pub fn finite_closure<'a, I>(members: I) -> Result<(USpec, bool)>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let given: BTreeSet<Permutation> = members
            .into_iter()
            .filter(|p| !p.is_empty())
            .cloned()
            .collect();
        let closed = closure(&given);
        let added = closed != given;
        Ok((USpec::from_closed(closed)?, added))
    }

    fn from_closed(members: BTreeSet<Permutation>) -> Result<USpec> {
        if members.is_empty() {
            return Err(Error::InvalidSpec("finite U must be nonempty".into()));
        }
        let lookup = members.iter().cloned().collect();
        Ok(USpec::FiniteSet(FiniteClass { members, lookup }))
    }

    /// Membership of a nonempty permutation; the empty permutation is never a
    /// member.
    pub fn contains(&self, pi: &Permutation) -> bool {
        if pi.is_empty() {
            return false;
        }
        match self {
            USpec::Trivial => pi.len() == 1,
            USpec::Increasing => pi.is_increasing(),
            USpec::Decreasing => pi.is_decreasing(),
            USpec::FiniteSet(f) => f.contains(pi),
        }
    }

    /// Members of length exactly `n`.
    pub fn members_of_len(&self, n: usize) -> Vec<Permutation> {
        if n == 0 {
            return Vec::new();
        }
        match self {
            USpec::Trivial => (n == 1).then(Permutation::point).into_iter().collect(),
            USpec::Increasing => vec![Permutation::identity(n)],
            USpec::Decreasing => vec![Permutation::decreasing(n)],
            USpec::FiniteSet(f) => f.members.iter().filter(|p| p.len() == n).cloned().collect(),
        }
    }
}

impl fmt::Display for USpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            USpec::Trivial => f.write_str("trivial"),
            USpec::Increasing => f.write_str("inc"),
            USpec::Decreasing => f.write_str("dec"),
            USpec::FiniteSet(c) => {
                let items: Vec<String> = c.members.iter().map(ToString::to_string).collect();
                write!(f, "finite{{{}}}", items.join(";"))
            }
        }
    }
}
