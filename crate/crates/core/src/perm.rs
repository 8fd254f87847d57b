//! Permutations in one-line notation and the containment order.
//!
//! A [`Permutation`] of length `n` stores the values `1..=n` in one-line
//! order. The empty permutation is representable and is contained in every
//! permutation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
///
/// Ordering is lexicographic on the one-line values, so permutations of a
/// fixed length sort the way their one-line strings do.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// The empty permutation.
    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    /// The single point `1`.
    pub fn point() -> Self {
        Permutation { values: vec![1] }
    }

    /// `12…n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    /// `n…21`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).rev().collect(),
        }
    }

    /// Builds a permutation from one-line values, checking that they form a
    /// bijection onto `1..=n`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::InvalidPermutation {
                    token: join(&values),
                    reason: format!("value {v} outside 1..={n}"),
                });
            }
            if seen[idx] {
                return Err(Error::InvalidPermutation {
                    token: join(&values),
                    reason: format!("value {v} repeated"),
                });
            }
            seen[idx] = true;
        }
        Ok(Permutation { values })
    }

    /// Rank-reduces any sequence of distinct integers to the permutation
    /// order-isomorphic to it.
    pub fn standardize<T: Ord + Copy>(seq: &[T]) -> Self {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by_key(|&i| seq[i]);
        let mut values = vec![0u32; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Permutation { values }
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Permutation::identity(n)),
        }
    }

    /// True iff `self` has a subsequence order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains(self, pattern)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !contains(self, pattern)
    }

    /// True iff `self` avoids every pattern in `basis`.
    pub fn avoids_all<'a, I>(&self, basis: I) -> bool
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        basis.into_iter().all(|b| !contains(self, b))
    }

    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        direct_sum(self, other)
    }

    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        skew_sum(self, other)
    }

    pub fn reverse(&self) -> Permutation {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len() as u32;
        Permutation {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut values = vec![0u32; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v as usize - 1] = i as u32 + 1;
        }
        Permutation { values }
    }

    /// Maximal decomposition into sum-indecomposable components.
    pub fn sum_components(&self) -> Result<Vec<Permutation>> {
        if self.is_empty() {
            return Err(Error::EmptyPermutation("sum_components"));
        }
        Ok(split_at(&self.values, &self.sum_cut_points()))
    }

    /// Maximal decomposition into skew-indecomposable components.
    pub fn skew_components(&self) -> Result<Vec<Permutation>> {
        if self.is_empty() {
            return Err(Error::EmptyPermutation("skew_components"));
        }
        Ok(split_at(&self.values, &self.skew_cut_points()))
    }

    /// A nonempty permutation is sum decomposable iff it has at least two
    /// sum components.
    pub fn is_sum_decomposable(&self) -> bool {
        self.len() >= 2 && !self.sum_cut_points().is_empty()
    }

    pub fn is_skew_decomposable(&self) -> bool {
        self.len() >= 2 && !self.skew_cut_points().is_empty()
    }

    /// Prefix lengths `k` (with `0 < k < n`) where the prefix holds exactly the
    /// values `1..=k`.
    fn sum_cut_points(&self) -> Vec<usize> {
        let n = self.len();
        let mut cuts = Vec::new();
        let mut max = 0;
        for (i, &v) in self.values.iter().enumerate().take(n.saturating_sub(1)) {
            max = max.max(v);
            if max as usize == i + 1 {
                cuts.push(i + 1);
            }
        }
        cuts
    }

    /// Prefix lengths `k` (with `0 < k < n`) where the prefix holds exactly the
    /// top `k` values.
    fn skew_cut_points(&self) -> Vec<usize> {
        let n = self.len();
        let mut cuts = Vec::new();
        let mut min = u32::MAX;
        for (i, &v) in self.values.iter().enumerate().take(n.saturating_sub(1)) {
            min = min.min(v);
            if (min as usize) == n - i {
                cuts.push(i + 1);
            }
        }
        cuts
    }

    pub fn is_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_decreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] > w[1])
    }

    /// Permutations obtained by deleting one point, standardized and
    /// deduplicated.
    pub fn one_point_deletions(&self) -> BTreeSet<Permutation> {
        (0..self.len())
            .map(|i| {
                let mut seq = self.values.clone();
                seq.remove(i);
                Permutation::standardize(&seq)
            })
            .collect()
    }

    /// Comma-separated one-line notation, e.g. `8,9,1,6,7,3,4,2`.
    pub fn to_comma_string(&self) -> String {
        join(&self.values)
    }
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn split_at(values: &[u32], cuts: &[usize]) -> Vec<Permutation> {
    let mut parts = Vec::with_capacity(cuts.len() + 1);
    let mut start = 0;
    for &end in cuts.iter().chain(std::iter::once(&values.len())) {
        let block = &values[start..end];
        // Blocks occupy a contiguous value range; shift it down to 1..=len.
        let low = *block.iter().min().expect("nonempty block") - 1;
        let part = block.iter().map(|&v| v - low).collect();
        parts.push(Permutation::from_values_unchecked(part));
        start = end;
    }
    parts
}

/// Depth-first embedding search. Each pattern entry is matched to a text
/// position after the previous one, with its value bounded by the images of
/// its nearest already-placed neighbours in value order.
pub fn contains(text: &Permutation, pattern: &Permutation) -> bool {
    let k = pattern.len();
    let n = text.len();
    if k == 0 {
        return true;
    }
    if k > n {
        return false;
    }
    if k == n {
        return text == pattern;
    }
    // For pattern entry d: the earlier entry holding the largest smaller value
    // and the one holding the smallest larger value.
    let pv = pattern.values();
    let bounds: Vec<(Option<usize>, Option<usize>)> = (0..k)
        .map(|d| {
            let mut lo: Option<usize> = None;
            let mut hi: Option<usize> = None;
            for e in 0..d {
                if pv[e] < pv[d] && lo.is_none_or(|l| pv[e] > pv[l]) {
                    lo = Some(e);
                }
                if pv[e] > pv[d] && hi.is_none_or(|h| pv[e] < pv[h]) {
                    hi = Some(e);
                }
            }
            (lo, hi)
        })
        .collect();
    let mut chosen = vec![0u32; k];
    embed(text.values(), &bounds, &mut chosen, 0, 0)
}

fn embed(
    text: &[u32],
    bounds: &[(Option<usize>, Option<usize>)],
    chosen: &mut [u32],
    depth: usize,
    start: usize,
) -> bool {
    let k = bounds.len();
    if depth == k {
        return true;
    }
    let (lo, hi) = bounds[depth];
    let lo_val = lo.map_or(0, |e| chosen[e]);
    let hi_val = hi.map_or(u32::MAX, |e| chosen[e]);
    let last = text.len() - (k - depth);
    for pos in start..=last {
        let v = text[pos];
        if v > lo_val && v < hi_val {
            chosen[depth] = v;
            if embed(text, bounds, chosen, depth + 1, pos + 1) {
                return true;
            }
        }
    }
    false
}

/// `pi ⊕ sigma`: `sigma` shifted up by `|pi|` and placed after `pi`.
pub fn direct_sum(pi: &Permutation, sigma: &Permutation) -> Permutation {
    let m = pi.len() as u32;
    let values = pi
        .values
        .iter()
        .copied()
        .chain(sigma.values.iter().map(|&v| v + m))
        .collect();
    Permutation { values }
}

/// `pi ⊖ sigma`: `pi` shifted up by `|sigma|` and placed before `sigma`.
pub fn skew_sum(pi: &Permutation, sigma: &Permutation) -> Permutation {
    let n = sigma.len() as u32;
    let values = pi
        .values
        .iter()
        .map(|&v| v + n)
        .chain(sigma.values.iter().copied())
        .collect();
    Permutation { values }
}

/// All nonempty permutations contained in some member of `set`.
pub fn closure<'a, I>(set: I) -> BTreeSet<Permutation>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut out = BTreeSet::new();
    let mut stack: Vec<Permutation> = set.into_iter().filter(|p| !p.is_empty()).cloned().collect();
    while let Some(p) = stack.pop() {
        if p.is_empty() || out.contains(&p) {
            continue;
        }
        if p.len() > 1 {
            stack.extend(
                p.one_point_deletions()
                    .into_iter()
                    .filter(|q| !out.contains(q)),
            );
        }
        out.insert(p);
    }
    out
}

/// Removes every element that contains another element, leaving the minimal
/// antichain generating the same avoidance class.
pub fn minimal_antichain<'a, I>(set: I) -> Vec<Permutation>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut items: Vec<Permutation> = set
        .into_iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    items.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Permutation> = Vec::new();
    for p in items {
        if !kept.iter().any(|q| contains(&p, q)) {
            kept.push(p);
        }
    }
    kept.sort();
    kept
}

/// Lexicographic iterator over the permutations of a fixed length.
#[derive(Debug, Clone)]
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut v = current.values.clone();
        // Standard next-lexicographic-permutation step.
        if v.len() >= 2 {
            if let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) {
                let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
                v.swap(i, j);
                v[i + 1..].reverse();
                self.next = Some(Permutation { values: v });
            }
        }
        Some(current)
    }
}

impl fmt::Display for Permutation {
    /// Compact digits for lengths up to 9, comma-separated otherwise; `ε` for
    /// the empty permutation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_comma_string())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `8,9,1,6,7,3,4,2`, compact `89167342` (length ≤ 9), and `ε` or
    /// the empty string for the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "ε" || t == "e" {
            return Ok(Permutation::empty());
        }
        let bad = |reason: String| Error::InvalidPermutation {
            token: t.to_string(),
            reason,
        };
        let values: Vec<u32> = if t.contains(',') {
            t.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| bad(format!("`{}` is not a positive integer", tok.trim())))
                })
                .collect::<Result<_>>()?
        } else {
            if t.len() > 9 {
                return Err(bad(
                    "compact notation is limited to length 9; use commas".into()
                ));
            }
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| bad(format!("`{c}` is not a digit")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values).map_err(|e| match e {
            Error::InvalidPermutation { reason, .. } => bad(reason),
            other => other,
        })
    }
}

impl Permutation {
    /// Parses any sequence of distinct positive integers and rank-reduces it
    /// to the order-isomorphic permutation. The flag is true when the input
    /// was not already a permutation of `1..=n`.
    pub fn parse_lenient(s: &str) -> Result<(Permutation, bool)> {
        match s.parse::<Permutation>() {
            Ok(p) => return Ok((p, false)),
            Err(Error::InvalidPermutation { .. }) => {}
            Err(e) => return Err(e),
        }
        let t = s.trim();
        let bad = |reason: String| Error::InvalidPermutation {
            token: t.to_string(),
            reason,
        };
        let values: Vec<u32> = if t.contains(',') {
            t.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .ok()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| bad(format!("`{}` is not a positive integer", tok.trim())))
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&v| v > 0)
                        .ok_or_else(|| bad(format!("`{c}` is not a nonzero digit")))
                })
                .collect::<Result<_>>()?
        };
        let distinct: BTreeSet<u32> = values.iter().copied().collect();
        if distinct.len() != values.len() {
            return Err(bad("repeated value".into()));
        }
        Ok((Permutation::standardize(&values), true))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_comma_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
