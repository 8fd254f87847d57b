//! Exhaustive length-by-length enumeration of `Av(B)` and `X[U] ∩ Av(B)`.
//!
//! Level `n + 1` is generated from level `n` by inserting the new maximum
//! into every gap of every member and filtering. This is complete for any
//! permutation class: deleting the maximum of a member yields a member.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::USpec;
use crate::error::{Error, Result};
use crate::perm::{minimal_antichain, Permutation};
use crate::septree::is_in_x_inflation;

/// Default per-level cap on stored members.
pub const DEFAULT_MAX_MEMBERS: usize = 10_000_000;

/// A finite basis, stored as a sorted antichain.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSpec {
    basis: Vec<Permutation>,
}

impl ClassSpec {
    /// Prunes non-minimal elements. The empty permutation is rejected: it
    /// would make the class empty.
    pub fn new<'a, I>(basis: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let items: Vec<&Permutation> = basis.into_iter().collect();
        if items.iter().any(|p| p.is_empty()) {
            return Err(Error::InvalidSpec(
                "the empty permutation cannot be a basis element".into(),
            ));
        }
        Ok(ClassSpec {
            basis: minimal_antichain(items),
        })
    }

    pub fn empty() -> Self {
        ClassSpec::default()
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    /// Adds one pattern, re-pruning to an antichain.
    pub fn with(&self, pattern: &Permutation) -> Result<Self> {
        ClassSpec::new(self.basis.iter().chain(std::iter::once(pattern)))
    }

    pub fn admits(&self, pi: &Permutation) -> bool {
        self.basis
            .iter()
            .filter(|b| b.len() <= pi.len())
            .all(|b| !pi.contains(b))
    }
}

/// `counts[n - 1] = |C_n|`, optionally with the sorted members of each
/// length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub counts: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Vec<Permutation>>>,
}

impl CountTable {
    pub fn max_len(&self) -> usize {
        self.counts.len()
    }

    /// `|C_n|` for `1 <= n <= max_len`.
    pub fn count(&self, n: usize) -> u64 {
        self.counts[n - 1]
    }

    /// `n,count` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,count\n");
        for (i, c) in self.counts.iter().enumerate() {
            s.push_str(&format!("{},{}\n", i + 1, c));
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    pub max_members: usize,
    pub keep_members: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            max_members: DEFAULT_MAX_MEMBERS,
            keep_members: false,
        }
    }
}

/// `|Av(B)_n|` for `n = 1..=max_n`.
pub fn enumerate_av(spec: &ClassSpec, max_n: usize) -> Result<CountTable> {
    enumerate_av_with(spec, max_n, &EnumerationOptions::default())
}

pub fn enumerate_av_with(
    spec: &ClassSpec,
    max_n: usize,
    opts: &EnumerationOptions,
) -> Result<CountTable> {
    enumerate_filtered(max_n, opts, |pi| spec.admits(pi))
}

/// `|(X[U] ∩ Av(B))_n|` for `n = 1..=max_n`.
pub fn enumerate_xu(u: &USpec, spec: &ClassSpec, max_n: usize) -> Result<CountTable> {
    enumerate_xu_with(u, spec, max_n, &EnumerationOptions::default())
}

pub fn enumerate_xu_with(
    u: &USpec,
    spec: &ClassSpec,
    max_n: usize,
    opts: &EnumerationOptions,
) -> Result<CountTable> {
    enumerate_filtered(max_n, opts, |pi| {
        spec.admits(pi) && is_in_x_inflation(pi, u)
    })
}

/// Level-synchronous generation for any class given by a membership
/// predicate. The predicate must describe a downward-closed set.
pub fn enumerate_filtered<F>(
    max_n: usize,
    opts: &EnumerationOptions,
    member: F,
) -> Result<CountTable>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    if max_n == 0 {
        return Err(Error::InvalidSpec(
            "maximum length must be at least 1".into(),
        ));
    }
    let mut counts = Vec::with_capacity(max_n);
    let mut all_members = opts.keep_members.then(Vec::new);
    let mut level: Vec<Permutation> = [Permutation::point()]
        .into_iter()
        .filter(|p| member(p))
        .collect();
    for n in 1..=max_n {
        if n > 1 {
            let mut next: Vec<Permutation> = level
                .par_iter()
                .flat_map_iter(insertions_of_max)
                .filter(|c| member(c))
                .collect();
            next.par_sort_unstable();
            level = next;
        }
        if level.len() > opts.max_members {
            return Err(Error::ResourceLimit {
                level: n,
                cap: opts.max_members,
            });
        }
        counts.push(level.len() as u64);
        if let Some(m) = all_members.as_mut() {
            m.push(level.clone());
        }
    }
    Ok(CountTable {
        counts,
        members: all_members,
    })
}

fn insertions_of_max(pi: &Permutation) -> impl Iterator<Item = Permutation> + '_ {
    let n = pi.len() as u32;
    (0..=pi.len()).map(move |pos| {
        let mut v = pi.values().to_vec();
        v.insert(pos, n + 1);
        Permutation::from_values_unchecked(v)
    })
}

/// Filters all `n!` permutations of each length. Used as a cross-check on
/// the incremental generator.
pub fn enumerate_naive<F>(max_n: usize, member: F) -> Vec<u64>
where
    F: Fn(&Permutation) -> bool,
{
    (1..=max_n)
        .map(|n| Permutation::all(n).filter(|p| member(p)).count() as u64)
        .collect()
}
