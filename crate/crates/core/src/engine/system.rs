//! The profile system `h = M·h + v` over achievable profiles of `X[U]`, and
//! the generating function of `X[U] ∩ Av(B)` obtained from it.
//!
//! For a profile `Q` let `f_Q` count members of `U` with profile `Q` and `h_Q`
//! count members of `X[U]` with profile `Q`. A sum decomposable member of
//! `X[U]` has a first sum component in `U`, a last sum component in `U`, or
//! both; counting the two cases and subtracting their overlap gives, for every
//! `Q ∋ ⊕`,
//!
//! ```text
//! h_Q =   Σ f_R h_S   [R ⊕ S = Q, ⊕ ∉ R]
//!       + Σ h_S f_T   [S ⊕ T = Q, ⊕ ∉ T]
//!       - Σ f_R h_S f_T [R ⊕ S ⊕ T = Q, ⊕ ∉ R, T]
//!       - Σ f_R f_T   [R ⊕ T = Q, ⊕ ∉ R, T]
//! ```
//!
//! where `R ⊕ S` is the combined profile. The skew case is the mirror image,
//! and a profile with neither marker belongs only to members of `U`, so
//! `h_Q = f_Q` there.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::profile::{Profile, PropertySet};
use super::USpec;
use crate::enumerate::ClassSpec;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::ratfun::{
    fixed_point_residual, solve_fixed_point_system, Poly, Rational, RationalFunction,
};

/// Default cap on the number of achievable profiles.
pub const DEFAULT_PROFILE_CAP: usize = 4096;

/// Assembled linear system for one `(U, B)` pair.
#[derive(Clone, Debug)]
pub struct ProfileSystem {
    properties: PropertySet,
    /// Patterns whose avoidance defines the target subclass.
    basis: Vec<Permutation>,
    /// `f_Q` for every profile realized by a member of `U`.
    u_profiles: BTreeMap<Profile, RationalFunction>,
    /// Achievable profiles of `X[U]`, in sorted order; index of unknown `h_Q`.
    profiles: Vec<Profile>,
    m: Vec<Vec<RationalFunction>>,
    v: Vec<RationalFunction>,
}

impl ProfileSystem {
    pub fn build(u: &USpec, basis: &ClassSpec) -> Result<Self> {
        Self::build_with_cap(u, basis, DEFAULT_PROFILE_CAP)
    }

    pub fn build_with_cap(u: &USpec, basis: &ClassSpec, cap: usize) -> Result<Self> {
        let properties = PropertySet::new(basis.basis());
        let u_profiles = u_profile_gfs(u, &properties)?;
        let profiles = achievable_profiles(&properties, &u_profiles, cap)?;
        let (m, v) = assemble(&properties, &u_profiles, &profiles);
        Ok(ProfileSystem {
            properties,
            basis: basis.basis().to_vec(),
            u_profiles,
            profiles,
            m,
            v,
        })
    }

    pub fn properties(&self) -> &PropertySet {
        &self.properties
    }

    pub fn profiles(&self) -> &[Profile] {
        &self.profiles
    }

    pub fn u_profiles(&self) -> &BTreeMap<Profile, RationalFunction> {
        &self.u_profiles
    }

    pub fn matrix(&self) -> &[Vec<RationalFunction>] {
        &self.m
    }

    pub fn constants(&self) -> &[RationalFunction] {
        &self.v
    }

    /// Whether every entry of `M` is divisible by `x`, which makes `I - M`
    /// invertible over ℚ(x).
    pub fn matrix_has_zero_constant_terms(&self) -> bool {
        self.m
            .iter()
            .flatten()
            .all(RationalFunction::has_zero_constant_term)
    }

    /// Solves for `h`, one generating function per achievable profile.
    pub fn solve(&self) -> Result<Vec<RationalFunction>> {
        solve_fixed_point_system(&self.m, &self.v)
    }

    /// `(I - M)·h - v` for a candidate solution.
    pub fn residual(&self, h: &[RationalFunction]) -> Vec<RationalFunction> {
        fixed_point_residual(&self.m, h, &self.v)
    }

    /// The profile `{Av(β) : β ∈ B}` whose supersets make up the subclass.
    pub fn target_profile(&self) -> Profile {
        let mut q = Profile::empty(self.properties.width());
        for b in &self.basis {
            q.set(
                self.properties
                    .avoid_index(b)
                    .expect("basis lies in its closure"),
            );
        }
        q
    }

    /// `g_Q`: the sum of `h_R` over achievable `R ⊇ Q`.
    pub fn g(&self, h: &[RationalFunction], q: &Profile) -> RationalFunction {
        self.profiles
            .iter()
            .zip(h)
            .filter(|(r, _)| r.is_superset(q))
            .fold(RationalFunction::zero(), |acc, (_, hr)| &acc + hr)
    }

    /// Generating function of `X[U] ∩ Av(B)`, nonempty permutations only.
    pub fn class_gf(&self) -> Result<RationalFunction> {
        let h = self.solve()?;
        Ok(self.g(&h, &self.target_profile()))
    }
}

/// `classGF(U, B)`: the rational generating function of `X[U] ∩ Av(B)`.
pub fn class_gf(u: &USpec, basis: &ClassSpec) -> Result<RationalFunction> {
    ProfileSystem::build(u, basis)?.class_gf()
}

fn xpow(k: usize) -> RationalFunction {
    RationalFunction::from_poly(Poly::monomial(Rational::from_integer(1.into()), k))
}

/// `f_Q` for every profile realized in `U`.
///
/// Monotone classes have one member per length; once the length exceeds every
/// monotone pattern of the property set (and is at least 2) the profile no
/// longer changes, so the tail is a single geometric term `x^m / (1 - x)`.
fn u_profile_gfs(u: &USpec, props: &PropertySet) -> Result<BTreeMap<Profile, RationalFunction>> {
    let mut out: BTreeMap<Profile, RationalFunction> = BTreeMap::new();
    let mut add = |q: Profile, f: RationalFunction| {
        let e = out.entry(q).or_insert_with(RationalFunction::zero);
        *e = &*e + &f;
    };
    match u {
        USpec::Trivial => add(
            props.profile_of(&Permutation::point())?,
            RationalFunction::x(),
        ),
        USpec::FiniteSet(c) => {
            for pi in c.members() {
                add(props.profile_of(pi)?, xpow(pi.len()));
            }
        }
        USpec::Increasing | USpec::Decreasing => {
            let monotone = |p: &Permutation| match u {
                USpec::Increasing => p.is_increasing(),
                _ => p.is_decreasing(),
            };
            let longest = props
                .patterns()
                .iter()
                .filter(|p| monotone(p))
                .map(Permutation::len)
                .max()
                .unwrap_or(0);
            let stable = (longest + 1).max(2);
            for n in 1..stable {
                let pi = &u.members_of_len(n)[0];
                add(props.profile_of(pi)?, xpow(n));
            }
            let pi = &u.members_of_len(stable)[0];
            let tail = xpow(stable).checked_div(&RationalFunction::from_i64(&[1, -1], &[1])?)?;
            add(props.profile_of(pi)?, tail);
        }
    }
    Ok(out)
}

/// Least set of profiles containing those of `U` and closed under attaching a
/// sum-indecomposable (resp. skew-indecomposable) member of `U` on either side
/// by `⊕` (resp. `⊖`).
fn achievable_profiles(
    props: &PropertySet,
    u_profiles: &BTreeMap<Profile, RationalFunction>,
    cap: usize,
) -> Result<Vec<Profile>> {
    let sum_atoms: Vec<&Profile> = u_profiles.keys().filter(|q| !q.is_sum()).collect();
    let skew_atoms: Vec<&Profile> = u_profiles.keys().filter(|q| !q.is_skew()).collect();
    let mut seen: BTreeSet<Profile> = u_profiles.keys().cloned().collect();
    let mut work: Vec<Profile> = seen.iter().cloned().collect();
    while let Some(s) = work.pop() {
        let mut fresh = Vec::new();
        for r in &sum_atoms {
            fresh.push(props.combine_sum(r, &s));
            fresh.push(props.combine_sum(&s, r));
        }
        for r in &skew_atoms {
            fresh.push(props.combine_skew(r, &s));
            fresh.push(props.combine_skew(&s, r));
        }
        for q in fresh {
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return Err(Error::ProfileExplosion {
                        count: seen.len(),
                        cap,
                    });
                }
                work.push(q);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

fn assemble(
    props: &PropertySet,
    u_profiles: &BTreeMap<Profile, RationalFunction>,
    profiles: &[Profile],
) -> (Vec<Vec<RationalFunction>>, Vec<RationalFunction>) {
    let n = profiles.len();
    let index: HashMap<&Profile, usize> =
        profiles.iter().enumerate().map(|(i, q)| (q, i)).collect();
    let mut m = vec![vec![RationalFunction::zero(); n]; n];
    let mut v = vec![RationalFunction::zero(); n];

    for (q, f) in u_profiles {
        if !q.is_sum() && !q.is_skew() {
            v[index[q]] = f.clone();
        }
    }

    for skew in [false, true] {
        let combine = |a: &Profile, b: &Profile| {
            if skew {
                props.combine_skew(a, b)
            } else {
                props.combine_sum(a, b)
            }
        };
        let atoms: Vec<(&Profile, &RationalFunction)> = u_profiles
            .iter()
            .filter(|(q, _)| if skew { !q.is_skew() } else { !q.is_sum() })
            .collect();
        let products: Vec<Vec<RationalFunction>> = atoms
            .iter()
            .map(|(_, fr)| atoms.iter().map(|(_, ft)| *fr * *ft).collect())
            .collect();

        for (si, s) in profiles.iter().enumerate() {
            for (r, fr) in &atoms {
                // first component in U
                let row = index[&combine(r, s)];
                m[row][si] = &m[row][si] + fr;
                // last component in U
                let row = index[&combine(s, r)];
                m[row][si] = &m[row][si] + fr;
            }
            for (ri, (r, _)) in atoms.iter().enumerate() {
                let rs = combine(r, s);
                for (ti, (t, _)) in atoms.iter().enumerate() {
                    let row = index[&combine(&rs, t)];
                    m[row][si] = &m[row][si] - &products[ri][ti];
                }
            }
        }
        // both ends in U with nothing between
        for (ri, (r, _)) in atoms.iter().enumerate() {
            for (ti, (t, _)) in atoms.iter().enumerate() {
                let row = index[&combine(r, t)];
                v[row] = &v[row] - &products[ri][ti];
            }
        }
    }
    (m, v)
}
