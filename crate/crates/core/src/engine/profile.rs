//! Query-complete property sets and permutation profiles.
//!
//! The property set for a basis `B` is `{⊕, ⊖} ∪ {Av(δ) : δ ∈ Cl(B)}`. The
//! profile of a permutation is the subset of properties it satisfies. Profiles
//! of `σ ⊕ τ` and `σ ⊖ τ` are functions of the profiles of `σ` and `τ`, which
//! is what lets the enumeration close into a finite linear system.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{closure, contains, Permutation};

/// Bit index of the "sum decomposable" property.
pub const SUM: usize = 0;
/// Bit index of the "skew decomposable" property.
pub const SKEW: usize = 1;

/// Subset of a [`PropertySet`] as a fixed-width bitset. Ordering is by the
/// underlying words, which makes every table built from profiles
/// deterministic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    bits: Vec<u64>,
}

impl Profile {
    pub fn empty(width: usize) -> Self {
        Profile {
            bits: vec![0; width.div_ceil(64)],
        }
    }

    pub fn has(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn is_sum(&self) -> bool {
        self.has(SUM)
    }

    pub fn is_skew(&self) -> bool {
        self.has(SKEW)
    }

    /// `self ⊇ other`.
    pub fn is_superset(&self, other: &Profile) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == *b)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}

/// How a pattern `δ` splits as `γ ⊕ ι` (or `γ ⊖ ι`): indices of the
/// `Av(γ)`/`Av(ι)` properties, `None` standing for the empty permutation.
type Split = (Option<usize>, Option<usize>);

#[derive(Clone, Debug)]
pub struct PropertySet {
    patterns: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    sum_splits: Vec<Vec<Split>>,
    skew_splits: Vec<Vec<Split>>,
}

impl PropertySet {
    /// Builds `{⊕, ⊖} ∪ {Av(δ) : δ ∈ Cl(B)}`.
    pub fn new<'a, I>(basis: I) -> Self
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut patterns: Vec<Permutation> = closure(basis).into_iter().collect();
        patterns.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index: HashMap<Permutation, usize> = patterns
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i + 2))
            .collect();
        let lookup = |seq: &[u32]| -> Option<usize> {
            if seq.is_empty() {
                None
            } else {
                Some(index[&Permutation::standardize(seq)])
            }
        };
        let mut sum_splits = Vec::with_capacity(patterns.len());
        let mut skew_splits = Vec::with_capacity(patterns.len());
        for delta in &patterns {
            let v = delta.values();
            let n = v.len();
            let mut sums = Vec::new();
            let mut skews = Vec::new();
            for k in 0..=n {
                let prefix = &v[..k];
                let max = prefix.iter().copied().max().unwrap_or(0) as usize;
                let min = prefix.iter().copied().min().unwrap_or(u32::MAX) as usize;
                if max == k {
                    sums.push((lookup(prefix), lookup(&v[k..])));
                }
                if k == 0 || min == n - k + 1 {
                    skews.push((lookup(prefix), lookup(&v[k..])));
                }
            }
            sum_splits.push(sums);
            skew_splits.push(skews);
        }
        PropertySet {
            patterns,
            index,
            sum_splits,
            skew_splits,
        }
    }

    /// Total number of properties, `2 + |Cl(B)|`.
    pub fn width(&self) -> usize {
        self.patterns.len() + 2
    }

    /// The patterns `δ` of the `Av(δ)` properties, in bit order from bit 2.
    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    /// Bit index of `Av(delta)`, if `delta ∈ Cl(B)`.
    pub fn avoid_index(&self, delta: &Permutation) -> Option<usize> {
        self.index.get(delta).copied()
    }

    /// The set of properties `pi` satisfies.
    pub fn profile_of(&self, pi: &Permutation) -> Result<Profile> {
        if pi.is_empty() {
            return Err(Error::EmptyPermutation("profile_of"));
        }
        let mut q = Profile::empty(self.width());
        if pi.is_sum_decomposable() {
            q.set(SUM);
        }
        if pi.is_skew_decomposable() {
            q.set(SKEW);
        }
        for (i, delta) in self.patterns.iter().enumerate() {
            if !contains(pi, delta) {
                q.set(i + 2);
            }
        }
        Ok(q)
    }

    /// Profile of `σ ⊕ τ` from the profiles of nonempty `σ` and `τ`.
    ///
    /// `σ ⊕ τ` avoids `δ` iff for every split `δ = γ ⊕ ι` (either side may be
    /// empty) `σ` avoids a nonempty `γ` or `τ` avoids a nonempty `ι`.
    pub fn combine_sum(&self, left: &Profile, right: &Profile) -> Profile {
        self.combine(left, right, &self.sum_splits, SUM)
    }

    /// Profile of `σ ⊖ τ`; mirror of [`combine_sum`](Self::combine_sum).
    pub fn combine_skew(&self, left: &Profile, right: &Profile) -> Profile {
        self.combine(left, right, &self.skew_splits, SKEW)
    }

    fn combine(
        &self,
        left: &Profile,
        right: &Profile,
        splits: &[Vec<Split>],
        marker: usize,
    ) -> Profile {
        let mut q = Profile::empty(self.width());
        q.set(marker);
        for (i, ways) in splits.iter().enumerate() {
            let avoided = ways
                .iter()
                .all(|&(g, t)| g.is_some_and(|g| left.has(g)) || t.is_some_and(|t| right.has(t)));
            if avoided {
                q.set(i + 2);
            }
        }
        q
    }

    /// Human-readable form, e.g. `{⊕, Av(21)}`.
    pub fn describe(&self, q: &Profile) -> String {
        let names: Vec<String> = q
            .ones()
            .map(|i| match i {
                SUM => "⊕".to_string(),
                SKEW => "⊖".to_string(),
                _ => format!("Av({})", self.patterns[i - 2]),
            })
            .collect();
        format!("{{{}}}", names.join(", "))
    }
}
