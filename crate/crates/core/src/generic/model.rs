use std::collections::BTreeSet;

use crate::classical::inclusion_maximal;
use crate::framework::{sort_extensions, ArgumentSet, ArgumentationFramework};
use crate::ranking::{Conditional, Proposition, Rank, RankingMeasure};

use super::delta::instantiation_base;
use super::space::{GenericSpace, GenericWorld};
use super::GenericError;

/// Premise, strict and defeasible content of one argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub premise: Proposition,
    pub strict: Proposition,
    pub claim: Proposition,
}

/// A shallow semantic instantiation: one [`Triple`] per argument, all over
/// the same world space, with `claim ⊨ strict ⊨ premise`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShallowInstantiation {
    space_len: usize,
    triples: Vec<Triple>,
}

impl ShallowInstantiation {
    pub fn new(space_len: usize, triples: Vec<Triple>) -> Result<Self, GenericError> {
        for (a, t) in triples.iter().enumerate() {
            let sizes = [
                t.premise.space_len(),
                t.strict.space_len(),
                t.claim.space_len(),
            ];
            if sizes.iter().any(|&s| s != space_len) {
                return Err(GenericError::SpaceMismatch);
            }
            if !t.claim.entails(&t.strict) || !t.strict.entails(&t.premise) {
                return Err(GenericError::IllFormedTriple(a));
            }
        }
        Ok(ShallowInstantiation { space_len, triples })
    }

    /// `(X_a, X_a, X_a ∧ Y_a)` for every argument.
    pub fn generic(space: &GenericSpace) -> Self {
        let triples = (0..space.arguments())
            .map(|a| {
                let phi = space.phi(a);
                Triple {
                    premise: phi.clone(),
                    strict: phi,
                    claim: space.psi(a),
                }
            })
            .collect();
        ShallowInstantiation {
            space_len: space.len(),
            triples,
        }
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn space_len(&self) -> usize {
        self.space_len
    }

    pub fn phi(&self, a: usize) -> &Proposition {
        &self.triples[a].premise
    }

    pub fn theta(&self, a: usize) -> &Proposition {
        &self.triples[a].strict
    }

    pub fn psi(&self, a: usize) -> &Proposition {
        &self.triples[a].claim
    }

    /// `θ_S = ∧_{a∈S} (φ_a ∧ θ_a)`; the tautology for `S = ∅`.
    pub fn theta_set(&self, set: ArgumentSet) -> Proposition {
        let mut out = Proposition::top(self.space_len);
        for a in set {
            out.and_assign(self.phi(a));
            out.and_assign(self.theta(a));
        }
        out
    }

    /// `ψ_{S,E} = θ_S ∧ ∧_{a∈E} ψ_a ∧ ∧_{a∉E} ¬ψ_a`, for `E ⊆ S`.
    pub fn psi_set(
        &self,
        context: ArgumentSet,
        extension: ArgumentSet,
    ) -> Result<Proposition, GenericError> {
        if !extension.is_subset(context) {
            return Err(GenericError::ExtensionOutsideContext);
        }
        let mut out = self.theta_set(context);
        for a in 0..self.len() {
            if extension.contains(a) {
                out.and_assign(self.psi(a));
            } else {
                out.and_not_assign(self.psi(a));
            }
        }
        Ok(out)
    }
}

/// A ranking measure paired with an instantiation of a framework's
/// arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankingInstantiationModel {
    pub measure: RankingMeasure,
    pub instantiation: ShallowInstantiation,
}

impl RankingInstantiationModel {
    pub fn new(
        measure: RankingMeasure,
        instantiation: ShallowInstantiation,
    ) -> Result<Self, GenericError> {
        if measure.space_len() != instantiation.space_len() {
            return Err(GenericError::SpaceMismatch);
        }
        Ok(RankingInstantiationModel {
            measure,
            instantiation,
        })
    }

    pub fn arguments(&self) -> usize {
        self.instantiation.len()
    }

    /// `R(ψ_a ∧ ψ_b) = ∞`
    pub fn rebuts(&self, a: usize, b: usize) -> bool {
        let i = &self.instantiation;
        self.measure.rank_of(&(i.psi(a) & i.psi(b))).is_top()
    }

    /// `R(ψ_a ∧ φ_b) = ∞`
    pub fn undermines(&self, a: usize, b: usize) -> bool {
        let i = &self.instantiation;
        self.measure.rank_of(&(i.psi(a) & i.phi(b))).is_top()
    }

    pub fn satisfies_instantiation(&self) -> bool {
        self.measure
            .satisfies_base(&instantiation_base(&self.instantiation))
    }

    /// Whether `a` attacks `b` according to the measure: the claims are
    /// jointly impossible, and either `a`'s claim survives in the joint
    /// premise context or `b`'s does not.
    pub fn derived_attack(&self, a: usize, b: usize) -> bool {
        let i = &self.instantiation;
        let n = i.space_len();
        let r = &self.measure;
        let joint = i.phi(a) & i.phi(b);
        r.satisfies(&Conditional::default(
            i.psi(a) & i.psi(b),
            Proposition::bottom(n),
        )) && (r.satisfies(&Conditional::default(joint.clone(), i.psi(a).clone()))
            || !r.satisfies(&Conditional::default(joint, i.psi(b).clone())))
    }

    /// All derived attacks, including self-pairs.
    pub fn derive_attacks(&self) -> Result<BTreeSet<(usize, usize)>, GenericError> {
        if !self.satisfies_instantiation() {
            return Err(GenericError::NotAModel);
        }
        let n = self.arguments();
        Ok((0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.derived_attack(a, b))
            .collect())
    }

    /// Whether `(measure, instantiation)` models `framework`: it satisfies
    /// the instantiation base and reproduces the attacks among the
    /// non-self-attacking arguments exactly.
    pub fn is_model_of(&self, framework: &ArgumentationFramework) -> bool {
        if framework.len() != self.arguments() {
            return false;
        }
        let Ok(derived) = self.derive_attacks() else {
            return false;
        };
        let plus = framework.non_self_attacking();
        plus.iter().all(|a| {
            plus.iter()
                .all(|b| framework.attacks_between(a, b) == derived.contains(&(a, b)))
        })
    }

    pub fn rank_of_theta(&self, context: ArgumentSet) -> Rank {
        self.measure.rank_of(&self.instantiation.theta_set(context))
    }

    pub fn rank_of_psi(
        &self,
        context: ArgumentSet,
        extension: ArgumentSet,
    ) -> Result<Rank, GenericError> {
        Ok(self
            .measure
            .rank_of(&self.instantiation.psi_set(context, extension)?))
    }

    /// Inclusion-maximal argument sets whose joint strict content is
    /// possible.
    pub fn maximal_coherent_sets(&self) -> Vec<ArgumentSet> {
        let mut coherent = Vec::new();
        let top = Proposition::top(self.instantiation.space_len());
        self.collect_coherent(0, ArgumentSet::EMPTY, &top, &mut coherent);
        inclusion_maximal(coherent)
    }

    // Coherence is downward closed, so an incoherent branch is cut whole.
    fn collect_coherent(
        &self,
        next: usize,
        set: ArgumentSet,
        theta: &Proposition,
        out: &mut Vec<ArgumentSet>,
    ) {
        if next == self.arguments() {
            out.push(set);
            return;
        }
        let mut with = theta.clone();
        with.and_assign(self.instantiation.phi(next));
        with.and_assign(self.instantiation.theta(next));
        if self.measure.rank_of(&with).is_finite() {
            self.collect_coherent(next + 1, set.with(next), &with, out);
        }
        self.collect_coherent(next + 1, set, theta, out);
    }

    /// Ranking extensions: every `E ⊆ S`, `S` maximal coherent, with
    /// `R(ψ_{S,E} | θ_S) = 0`. Canonical order.
    pub fn ranking_extensions(&self) -> Vec<ArgumentSet> {
        let mut out = Vec::new();
        for context in self.maximal_coherent_sets() {
            let theta = self.instantiation.theta_set(context);
            let target = self.measure.rank_of(&theta);
            let mut base = theta;
            let outside = ArgumentSet::full(self.arguments()).difference(context);
            for a in outside {
                base.and_not_assign(self.instantiation.psi(a));
            }
            let members: Vec<usize> = context.iter().collect();
            self.collect_minimal(&members, ArgumentSet::EMPTY, &base, target, &mut out);
        }
        sort_extensions(&mut out);
        out
    }

    // Conjoining only raises ranks, so any branch already above the
    // context's rank cannot reach conditional rank zero.
    fn collect_minimal(
        &self,
        members: &[usize],
        chosen: ArgumentSet,
        prop: &Proposition,
        target: Rank,
        out: &mut Vec<ArgumentSet>,
    ) {
        let rank = self.measure.rank_of(prop);
        if rank > target {
            return;
        }
        let Some((&a, rest)) = members.split_first() else {
            out.push(chosen);
            return;
        };
        let psi = self.instantiation.psi(a);
        let mut with = prop.clone();
        with.and_assign(psi);
        self.collect_minimal(rest, chosen.with(a), &with, target, out);
        let mut without = prop.clone();
        without.and_not_assign(psi);
        self.collect_minimal(rest, chosen, &without, target, out);
    }
}

/// Per-framework tables for evaluating the canonical JZ measure on compact
/// worlds.
#[derive(Debug, Clone)]
pub struct JzEvaluator {
    self_attacking: u64,
    one_sided_targets: Vec<u64>,
    conflicting: Vec<u64>,
}

impl JzEvaluator {
    pub fn new(framework: &ArgumentationFramework) -> Self {
        let n = framework.len();
        let self_attacking = !framework.non_self_attacking().bits() & ArgumentSet::full(n).bits();
        let one_sided_targets = (0..n)
            .map(|a| {
                framework
                    .targets_of(a)
                    .iter()
                    .filter(|&b| framework.attacks_one_sided(a, b))
                    .collect::<ArgumentSet>()
                    .bits()
            })
            .collect();
        let conflicting = (0..n)
            .map(|a| {
                framework
                    .targets_of(a)
                    .union(framework.attackers_of(a))
                    .bits()
            })
            .collect();
        JzEvaluator {
            self_attacking,
            one_sided_targets,
            conflicting,
        }
    }

    /// Rank of the world with `X` mask `x` and `X ∧ Y` mask `xy`; `None` is
    /// infinity.
    ///
    /// +1 for each non-self-attacking `a` with `X_a ∧ ¬Y_a`, ∞ if `a`
    /// attacks itself; +1 for each one-sided `a ▷ b` with `X_a ∧ ¬Y_a` and
    /// `X_b`; ∞ when two conflicting arguments (or a self-attacker) have
    /// `X ∧ Y`.
    pub fn rank_masks(&self, x: u64, xy: u64) -> Option<u64> {
        let rejected = x & !xy;
        if rejected & self.self_attacking != 0 {
            return None;
        }
        let mut accepted = xy;
        while accepted != 0 {
            let a = accepted.trailing_zeros() as usize;
            if self.conflicting[a] & xy != 0 {
                return None;
            }
            accepted &= accepted - 1;
        }
        let mut rank = rejected.count_ones() as u64;
        let mut rest = rejected;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rank += (self.one_sided_targets[a] & x).count_ones() as u64;
            rest &= rest - 1;
        }
        Some(rank)
    }
}

fn to_rank(r: Option<u64>) -> Rank {
    r.map_or(Rank::TOP, Rank::integer)
}

/// Closed-form rank of a compact world under the canonical JZ measure.
pub fn jz_world_rank(framework: &ArgumentationFramework, world: &GenericWorld) -> Rank {
    assert_eq!(
        world.len(),
        framework.len(),
        "world does not match framework"
    );
    let (x, xy) = world.masks();
    to_rank(JzEvaluator::new(framework).rank_masks(x, xy))
}

/// The canonical JZ measure over the compact world space of `framework`.
pub fn jz_measure(framework: &ArgumentationFramework, space: &GenericSpace) -> RankingMeasure {
    assert_eq!(
        space.arguments(),
        framework.len(),
        "space does not match framework"
    );
    let eval = JzEvaluator::new(framework);
    RankingMeasure::from_ranks(
        (0..space.len())
            .map(|w| {
                let (x, xy) = space.masks(w);
                to_rank(eval.rank_masks(x, xy))
            })
            .collect(),
    )
}

/// `(R_jz, I)` for a generic instantiation `I` of `framework`.
pub fn jz_model(
    framework: &ArgumentationFramework,
) -> Result<RankingInstantiationModel, GenericError> {
    let space = GenericSpace::new(framework.len())?;
    Ok(RankingInstantiationModel {
        measure: jz_measure(framework, &space),
        instantiation: ShallowInstantiation::generic(&space),
    })
}

/// JZ extensions computed from the ranking model itself.
pub fn ranking_extensions_semantic(
    framework: &ArgumentationFramework,
) -> Result<Vec<ArgumentSet>, GenericError> {
    Ok(jz_model(framework)?.ranking_extensions())
}
