use crate::framework::ArgumentationFramework;
use crate::ranking::{Conditional, DefaultBase, Proposition, Rank};

use super::model::ShallowInstantiation;

/// One conditional of the default base induced by a framework and an
/// instantiation, identified by the arguments it talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenericDefault {
    /// `φ_a ⇝ ψ_a`
    Claim(usize),
    /// `φ_a ⊐ θ_a`; a tautology when `θ_a = φ_a`.
    Premise(usize),
    /// `ψ_a ∧ ψ_b ⇝ ⊥` for `a ▷ b` or `b ▷ a`, with `a <= b`.
    Conflict(usize, usize),
    /// `φ_a ∧ φ_b ⇝ ψ_a` for a one-sided attack `a ▷ b`.
    OneSided(usize, usize),
}

impl GenericDefault {
    pub fn to_conditional(self, inst: &ShallowInstantiation) -> Conditional {
        let n = inst.space_len();
        match self {
            GenericDefault::Claim(a) => {
                Conditional::default(inst.phi(a).clone(), inst.psi(a).clone())
            }
            GenericDefault::Premise(a) => {
                Conditional::strict(inst.phi(a).clone(), inst.theta(a).clone())
            }
            GenericDefault::Conflict(a, b) => {
                Conditional::default(inst.psi(a) & inst.psi(b), Proposition::bottom(n))
            }
            GenericDefault::OneSided(a, b) => {
                Conditional::default(inst.phi(a) & inst.phi(b), inst.psi(a).clone())
            }
        }
    }

    /// Shift amount of this conditional in the canonical JZ construction.
    pub fn jz_shift(self, framework: &ArgumentationFramework) -> Rank {
        match self {
            GenericDefault::Claim(a) if framework.is_self_attacking(a) => Rank::TOP,
            GenericDefault::Claim(_) => Rank::ONE,
            GenericDefault::Premise(_) => Rank::ZERO,
            GenericDefault::Conflict(..) => Rank::TOP,
            GenericDefault::OneSided(..) => Rank::ONE,
        }
    }

    pub fn describe(self, framework: &ArgumentationFramework) -> String {
        let n = |i: usize| framework.name(i);
        match self {
            GenericDefault::Claim(a) => format!("φ_{0}⇝ψ_{0}", n(a)),
            GenericDefault::Premise(a) => format!("φ_{0}⊐θ_{0}", n(a)),
            GenericDefault::Conflict(a, b) => format!("ψ_{}∧ψ_{}⇝⊥", n(a), n(b)),
            GenericDefault::OneSided(a, b) => format!("φ_{0}∧φ_{1}⇝ψ_{0}", n(a), n(b)),
        }
    }
}

/// The default base of a framework under a generic instantiation:
/// claim defaults in argument order, then one conflict default per attacked
/// pair (sorted), then one default per one-sided attack (sorted). The
/// tautological premise conditionals are left out.
pub fn generic_delta(framework: &ArgumentationFramework) -> Vec<GenericDefault> {
    let mut out: Vec<GenericDefault> = (0..framework.len()).map(GenericDefault::Claim).collect();
    let mut conflicts: Vec<(usize, usize)> = framework
        .attacks()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    conflicts.sort_unstable();
    conflicts.dedup();
    out.extend(
        conflicts
            .into_iter()
            .map(|(a, b)| GenericDefault::Conflict(a, b)),
    );
    out.extend(
        framework
            .attacks()
            .filter(|&(a, b)| framework.attacks_one_sided(a, b))
            .map(|(a, b)| GenericDefault::OneSided(a, b)),
    );
    out
}

/// `generic_delta` as a [`DefaultBase`] over `inst`'s world space.
pub fn delta_base(defaults: &[GenericDefault], inst: &ShallowInstantiation) -> DefaultBase {
    DefaultBase::new(
        inst.space_len(),
        defaults.iter().map(|d| d.to_conditional(inst)).collect(),
    )
    .expect("instantiation propositions share one space")
}

/// `{φ_a ⇝ ψ_a, φ_a ⊐ θ_a | a}`: what every ranking instantiation model has
/// to satisfy.
pub fn instantiation_base(inst: &ShallowInstantiation) -> DefaultBase {
    let defaults: Vec<GenericDefault> = (0..inst.len())
        .flat_map(|a| [GenericDefault::Claim(a), GenericDefault::Premise(a)])
        .collect();
    delta_base(&defaults, inst)
}
