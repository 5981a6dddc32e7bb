//! Monoid-level verdicts checked over all small acts: left (0-)perfect,
//! left (0-)steady, and the ascending chain condition on cyclic subacts.
//!
//! Each sweep quantifies only over acts up to a size bound, so a passing
//! sweep reports [`Verdict::HoldsWithinBounds`]. A failing one carries
//! witnesses that [`ClassifierReport::recheck`] can verify independently.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::act::{Act, Category};
use crate::enumeration::{canonical_act, enumerate_acts, enumerate_left_congruences};
use crate::error::Result;
use crate::monoid::Monoid;
use crate::projectivity::projective_cover;
use crate::structure::{is_compact_bounded, is_cyclic, is_hollow, is_locally_cyclic};

pub const DEFAULT_PERFECT_ACT_SIZE: usize = 4;
pub const DEFAULT_STEADY_ACT_SIZE: usize = 5;
/// Hollow acts up to this size are also run through [`is_compact_bounded`]
/// by [`is_left_0steady`].
pub const COMPACT_SPOT_CHECK_SIZE: usize = 3;
/// Family size and summand size used by those spot checks.
pub const COMPACT_SPOT_CHECK_BOUNDS: (usize, usize) = (2, 3);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    HoldsWithinBounds,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::HoldsWithinBounds => "holds-within-bounds",
        }
    }

    pub fn is_fail(self) -> bool {
        self == Verdict::Fails
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    LeftPerfect,
    Left0Perfect,
    AccCyclicSubacts,
    LeftSteady,
    Left0Steady,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::LeftPerfect,
        Property::Left0Perfect,
        Property::AccCyclicSubacts,
        Property::LeftSteady,
        Property::Left0Steady,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::LeftPerfect => "left_perfect",
            Property::Left0Perfect => "left_0perfect",
            Property::AccCyclicSubacts => "acc_cyclic_subacts",
            Property::LeftSteady => "left_steady",
            Property::Left0Steady => "left_0steady",
        }
    }

    pub fn default_act_size(self) -> usize {
        match self {
            Property::LeftPerfect | Property::Left0Perfect => DEFAULT_PERFECT_ACT_SIZE,
            _ => DEFAULT_STEADY_ACT_SIZE,
        }
    }

    /// Runs the classifier for this property.
    pub fn classify(self, monoid: &Arc<Monoid>, act_size: usize) -> Result<ClassifierReport> {
        match self {
            Property::LeftPerfect => is_left_perfect(monoid, act_size),
            Property::Left0Perfect => is_left_0perfect(monoid, act_size),
            Property::AccCyclicSubacts => acc_cyclic_subacts_report(monoid, act_size),
            Property::LeftSteady => is_left_steady(monoid, act_size),
            Property::Left0Steady => is_left_0steady(monoid, act_size),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Property::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest act size swept.
    pub act_size: usize,
    /// Cover search bound; `None` means the per-act default.
    pub cover_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessReason {
    /// No projective cover within the cover search bound.
    NoProjectiveCover(Category),
    LocallyCyclicNotCyclic,
    HollowNotCyclic(Category),
    /// A hollow act that failed the bounded compactness spot check.
    HollowNotCompact,
    /// A chain of cyclic subacts longer than `|S|`.
    LongCyclicChain(usize),
}

impl fmt::Display for WitnessReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessReason::NoProjectiveCover(c) => write!(f, "no projective cover in {c}"),
            WitnessReason::LocallyCyclicNotCyclic => f.write_str("locally cyclic but not cyclic"),
            WitnessReason::HollowNotCyclic(c) => write!(f, "hollow in {c} but not cyclic"),
            WitnessReason::HollowNotCompact => {
                f.write_str("hollow but fails the compactness check")
            }
            WitnessReason::LongCyclicChain(n) => write!(f, "cyclic subact chain of length {n}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub act: Act,
    pub reason: WitnessReason,
}

impl Witness {
    /// Re-derives the failure from scratch.
    pub fn confirm(&self, monoid: &Monoid, cover_size: Option<usize>) -> bool {
        let act = &self.act;
        if act.is_empty() {
            return false;
        }
        match &self.reason {
            WitnessReason::NoProjectiveCover(c) => {
                matches!(projective_cover(act, *c, cover_size), Ok(None))
            }
            WitnessReason::LocallyCyclicNotCyclic => {
                is_locally_cyclic(act).unwrap_or(false) && matches!(is_cyclic(act), Ok(None))
            }
            WitnessReason::HollowNotCyclic(c) => {
                is_hollow(act, *c).unwrap_or(false) && matches!(is_cyclic(act), Ok(None))
            }
            WitnessReason::HollowNotCompact => {
                let (k, m) = COMPACT_SPOT_CHECK_BOUNDS;
                is_hollow(act, Category::Zeroed).unwrap_or(false)
                    && matches!(is_compact_bounded(act, Category::Zeroed, k, m), Ok(false))
            }
            WitnessReason::LongCyclicChain(n) => {
                *n > monoid.size() && longest_cyclic_chain(act) == *n
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassifierReport {
    pub monoid: Arc<Monoid>,
    pub property: Property,
    pub verdict: Verdict,
    pub bounds: Bounds,
    pub acts_checked: usize,
    pub witnesses: Vec<Witness>,
    /// For [`Property::AccCyclicSubacts`]: `profile[n]` acts have a longest
    /// chain of `n` cyclic subacts.
    pub chain_profile: Option<Vec<usize>>,
}

impl ClassifierReport {
    /// Checks the report's internal consistency: a failing verdict must come
    /// with witnesses that all re-verify, and a passing one with none.
    pub fn recheck(&self) -> std::result::Result<(), String> {
        match self.verdict {
            Verdict::Fails => {
                if self.witnesses.is_empty() {
                    return Err(format!("{}: fails without a witness", self.property));
                }
                for w in &self.witnesses {
                    if !w.confirm(&self.monoid, self.bounds.cover_size) {
                        return Err(format!(
                            "{}: witness does not re-verify ({})",
                            self.property, w.reason
                        ));
                    }
                }
                Ok(())
            }
            _ if !self.witnesses.is_empty() => {
                Err(format!("{}: passing verdict with witnesses", self.property))
            }
            _ => Ok(()),
        }
    }
}

/// The cyclic acts `S/ρ` for all left congruences `ρ`, one per
/// isomorphism class, in congruence order (so `S` itself first, `θ` last).
pub fn cyclic_acts(monoid: &Arc<Monoid>, category: Category) -> Result<Vec<Act>> {
    let regular = Act::regular(monoid.clone(), category);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for rho in enumerate_left_congruences(monoid)? {
        let (q, _) = rho.quotient(&regular);
        if seen.insert(canonical_act(&q)) {
            out.push(q);
        }
    }
    Ok(out)
}

fn nonempty_acts(monoid: &Arc<Monoid>, size: usize, category: Category) -> Result<Vec<Act>> {
    Ok(enumerate_acts(monoid, size, category)?
        .into_iter()
        .filter(|a| !a.is_empty())
        .collect())
}

fn sweep(acts: &[Act], check: impl Fn(&Act) -> Option<WitnessReason> + Sync) -> Vec<Witness> {
    acts.par_iter()
        .filter_map(|a| {
            check(a).map(|reason| Witness {
                act: a.clone(),
                reason,
            })
        })
        .collect()
}

fn report(
    monoid: &Arc<Monoid>,
    property: Property,
    act_size: usize,
    acts_checked: usize,
    witnesses: Vec<Witness>,
) -> ClassifierReport {
    ClassifierReport {
        monoid: monoid.clone(),
        property,
        verdict: if witnesses.is_empty() {
            Verdict::HoldsWithinBounds
        } else {
            Verdict::Fails
        },
        bounds: Bounds {
            act_size,
            cover_size: None,
        },
        acts_checked,
        witnesses,
        chain_profile: None,
    }
}

fn no_cover(act: &Act, category: Category) -> Option<WitnessReason> {
    match projective_cover(act, category, None) {
        Ok(Some(_)) => None,
        _ => Some(WitnessReason::NoProjectiveCover(category)),
    }
}

/// Left perfect within bounds: every cyclic act has a projective cover, and
/// every act of size at most `act_size` that is locally cyclic is cyclic.
pub fn is_left_perfect(monoid: &Arc<Monoid>, act_size: usize) -> Result<ClassifierReport> {
    let cyclic = cyclic_acts(monoid, Category::Plain)?;
    let acts = nonempty_acts(monoid, act_size, Category::Plain)?;
    let mut witnesses = sweep(&cyclic, |a| no_cover(a, Category::Plain));
    witnesses.extend(sweep(&acts, |a| {
        let lc = is_locally_cyclic(a).expect("nonempty");
        (lc && is_cyclic(a).expect("nonempty").is_none())
            .then_some(WitnessReason::LocallyCyclicNotCyclic)
    }));
    Ok(report(
        monoid,
        Property::LeftPerfect,
        act_size,
        cyclic.len() + acts.len(),
        witnesses,
    ))
}

/// Left 0-perfect within bounds: every zeroed act of size at most
/// `act_size` has a projective cover.
pub fn is_left_0perfect(monoid: &Arc<Monoid>, act_size: usize) -> Result<ClassifierReport> {
    let acts = nonempty_acts(monoid, act_size, Category::Zeroed)?;
    let witnesses = sweep(&acts, |a| no_cover(a, Category::Zeroed));
    Ok(report(
        monoid,
        Property::Left0Perfect,
        act_size,
        acts.len(),
        witnesses,
    ))
}

/// Length of the longest strictly increasing chain of cyclic subacts.
pub fn longest_cyclic_chain(act: &Act) -> usize {
    let mut orbits: Vec<FixedBitSet> = act.orbits();
    orbits.sort_by_key(|o| (o.count_ones(..), o.ones().collect::<Vec<_>>()));
    orbits.dedup();
    // orbits are sorted by size, so every proper subset comes earlier
    let mut depth = vec![1usize; orbits.len()];
    for i in 0..orbits.len() {
        for j in 0..i {
            if orbits[j].is_subset(&orbits[i]) && orbits[j] != orbits[i] {
                depth[i] = depth[i].max(depth[j] + 1);
            }
        }
    }
    depth.into_iter().max().unwrap_or(0)
}

/// The chain profile of cyclic subacts over all plain acts of size at most
/// `act_size`.
///
/// A finite monoid satisfies the ascending chain condition outright: a
/// cyclic subact `Sa` has at most `|S|` elements, so a strict chain has at
/// most `|S|` members. The verdict is therefore [`Verdict::Holds`], and any
/// computed chain longer than `|S|` is reported as a failure.
pub fn acc_cyclic_subacts_report(
    monoid: &Arc<Monoid>,
    act_size: usize,
) -> Result<ClassifierReport> {
    let acts = nonempty_acts(monoid, act_size, Category::Plain)?;
    let lengths: Vec<usize> = acts.par_iter().map(longest_cyclic_chain).collect();
    let mut profile = vec![0usize; lengths.iter().copied().max().unwrap_or(0) + 1];
    for &l in &lengths {
        profile[l] += 1;
    }
    let witnesses: Vec<Witness> = acts
        .iter()
        .zip(&lengths)
        .filter(|(_, &l)| l > monoid.size())
        .map(|(a, &l)| Witness {
            act: a.clone(),
            reason: WitnessReason::LongCyclicChain(l),
        })
        .collect();
    let mut r = report(
        monoid,
        Property::AccCyclicSubacts,
        act_size,
        acts.len(),
        witnesses,
    );
    if !r.verdict.is_fail() {
        r.verdict = Verdict::Holds;
    }
    r.chain_profile = Some(profile);
    Ok(r)
}

fn hollow_not_cyclic(a: &Act, category: Category) -> Option<WitnessReason> {
    let hollow = is_hollow(a, category).expect("nonempty");
    (hollow && is_cyclic(a).expect("nonempty").is_none())
        .then_some(WitnessReason::HollowNotCyclic(category))
}

/// Left steady within bounds: every hollow plain act of size at most
/// `act_size` is cyclic.
pub fn is_left_steady(monoid: &Arc<Monoid>, act_size: usize) -> Result<ClassifierReport> {
    let acts = nonempty_acts(monoid, act_size, Category::Plain)?;
    let witnesses = sweep(&acts, |a| hollow_not_cyclic(a, Category::Plain));
    Ok(report(
        monoid,
        Property::LeftSteady,
        act_size,
        acts.len(),
        witnesses,
    ))
}

/// Left 0-steady within bounds: every hollow zeroed act of size at most
/// `act_size` is cyclic.
///
/// Hollow acts of size at most [`COMPACT_SPOT_CHECK_SIZE`] are also checked
/// to be compact against small families, and the verdict is reconciled with
/// [`acc_cyclic_subacts_report`]: the two conditions are equivalent, so a
/// chain-condition failure is carried over as a witness here as well.
pub fn is_left_0steady(monoid: &Arc<Monoid>, act_size: usize) -> Result<ClassifierReport> {
    let acts = nonempty_acts(monoid, act_size, Category::Zeroed)?;
    let (k, m) = COMPACT_SPOT_CHECK_BOUNDS;
    let mut witnesses = sweep(&acts, |a| {
        if let Some(r) = hollow_not_cyclic(a, Category::Zeroed) {
            return Some(r);
        }
        let spot = a.size() <= COMPACT_SPOT_CHECK_SIZE
            && is_hollow(a, Category::Zeroed).expect("nonempty");
        (spot && !is_compact_bounded(a, Category::Zeroed, k, m).expect("nonempty"))
            .then_some(WitnessReason::HollowNotCompact)
    });
    let acc = acc_cyclic_subacts_report(monoid, act_size)?;
    witnesses.extend(acc.witnesses);
    Ok(report(
        monoid,
        Property::Left0Steady,
        act_size,
        acts.len(),
        witnesses,
    ))
}
