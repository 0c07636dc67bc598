//! Generic instantiations of frameworks by default bases, the canonical JZ
//! ranking model, and ranking extensions computed from ranking models.
//!
//! Each argument `a` is read as a pair of fresh atoms `X_a`, `Y_a` with
//! premise `φ_a = θ_a = X_a` and claim `ψ_a = X_a ∧ Y_a`. Propositions
//! live on the compact space of [`GenericSpace`].

mod delta;
mod model;
mod space;

pub use delta::{delta_base, generic_delta, instantiation_base, GenericDefault};
pub use model::{
    jz_measure, jz_model, jz_world_rank, ranking_extensions_semantic, JzEvaluator,
    RankingInstantiationModel, ShallowInstantiation, Triple,
};
pub use space::{GenericSpace, GenericState, GenericWorld, MAX_GENERIC_ARGUMENTS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenericError {
    #[error("{0} arguments exceed the compact world space limit of {MAX_GENERIC_ARGUMENTS}")]
    TooLarge(usize),
    #[error("extension is not contained in its context set")]
    ExtensionOutsideContext,
    #[error("propositions or measure live on different world spaces")]
    SpaceMismatch,
    #[error("triple of argument #{0} violates claim ⊨ strict ⊨ premise")]
    IllFormedTriple(usize),
    #[error("measure does not satisfy the instantiation's conditionals")]
    NotAModel,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::{sort_extensions, ArgumentSet, ArgumentationFramework};
    use crate::ranking::{construct, jj_search, Rank};

    fn af(args: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
        ArgumentationFramework::new(args.iter().copied(), attacks.iter().copied()).unwrap()
    }

    fn set(f: &ArgumentationFramework, names: &[&str]) -> ArgumentSet {
        f.set_of(names.iter().copied()).unwrap()
    }

    fn pqr() -> ArgumentationFramework {
        af(&["p", "q", "r"], &[("p", "q"), ("q", "r")])
    }

    #[test]
    fn delta_for_chain() {
        let f = pqr();
        let labels: Vec<String> = generic_delta(&f).iter().map(|d| d.describe(&f)).collect();
        assert_eq!(
            labels,
            vec![
                "φ_p⇝ψ_p",
                "φ_q⇝ψ_q",
                "φ_r⇝ψ_r",
                "ψ_p∧ψ_q⇝⊥",
                "ψ_q∧ψ_r⇝⊥",
                "φ_p∧φ_q⇝ψ_p",
                "φ_q∧φ_r⇝ψ_q",
            ]
        );
        let free = af(&["a", "b", "c"], &[]);
        assert_eq!(generic_delta(&free).len(), 3);
    }

    #[test]
    fn self_attack_makes_premise_impossible() {
        let f = af(&["a"], &[("a", "a")]);
        assert!(generic_delta(&f).contains(&GenericDefault::Conflict(0, 0)));
        let model = jz_model(&f).unwrap();
        assert_eq!(model.measure.rank_of(model.instantiation.phi(0)), Rank::TOP);
    }

    #[test]
    fn world_rank_examples() {
        let f = af(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(jz_world_rank(&f, &"YNY".parse().unwrap()), Rank::integer(2));
        assert_eq!(jz_world_rank(&f, &"---".parse().unwrap()), Rank::ZERO);
        let two = af(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(jz_world_rank(&two, &"YY".parse().unwrap()), Rank::TOP);
    }

    #[test]
    fn closed_form_equals_construction() {
        let f = af(
            &["a", "b", "c", "d"],
            &[("a", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "c")],
        );
        let space = GenericSpace::new(f.len()).unwrap();
        let inst = ShallowInstantiation::generic(&space);
        let defaults = generic_delta(&f);
        let base = delta_base(&defaults, &inst);
        let shifts: Vec<Rank> = defaults.iter().map(|d| d.jz_shift(&f)).collect();
        let built = construct(&base, &shifts).unwrap();
        let closed = jz_measure(&f, &space);
        assert_eq!(built, closed);
        assert!(closed.satisfies_base(&base));
    }

    #[test]
    fn chain_model_is_unique_jj_model() {
        let f = pqr();
        let space = GenericSpace::new(f.len()).unwrap();
        let inst = ShallowInstantiation::generic(&space);
        let base = delta_base(&generic_delta(&f), &inst);
        let found = jj_search(&base, 4);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].measure, jz_measure(&f, &space));
    }

    #[test]
    fn theta_and_psi_sets() {
        let f = af(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let model = jz_model(&f).unwrap();
        let inst = &model.instantiation;
        assert!(inst.theta_set(ArgumentSet::EMPTY).is_tautology());
        assert_eq!(
            model
                .rank_of_psi(f.arguments(), ArgumentSet::EMPTY)
                .unwrap(),
            Rank::integer(5)
        );
        assert_eq!(
            inst.psi_set(set(&f, &["a"]), set(&f, &["a", "b"])),
            Err(GenericError::ExtensionOutsideContext)
        );
        let two = af(&["a", "b"], &[("a", "b"), ("b", "a")]);
        let m2 = jz_model(&two).unwrap();
        assert_eq!(
            m2.rank_of_psi(two.arguments(), two.arguments()).unwrap(),
            Rank::TOP
        );
        // conditional rank of the best candidate given θ_A is zero
        let best = inst.psi_set(f.arguments(), set(&f, &["a", "c"])).unwrap();
        assert_eq!(
            model
                .measure
                .conditional_rank(&best, &inst.theta_set(f.arguments())),
            Rank::ZERO
        );
    }

    #[test]
    fn coherent_sets() {
        let f = af(
            &["a", "b", "c"],
            &[("a", "a"), ("a", "b"), ("b", "c"), ("c", "a")],
        );
        assert_eq!(
            jz_model(&f).unwrap().maximal_coherent_sets(),
            vec![set(&f, &["b", "c"])]
        );
        let free = af(&["a", "b"], &[]);
        assert_eq!(
            jz_model(&free).unwrap().maximal_coherent_sets(),
            vec![free.arguments()]
        );
        let loops = af(&["a", "b"], &[("a", "a"), ("b", "b"), ("a", "b")]);
        let m = jz_model(&loops).unwrap();
        assert_eq!(m.maximal_coherent_sets(), vec![ArgumentSet::EMPTY]);
        assert_eq!(m.ranking_extensions(), vec![ArgumentSet::EMPTY]);
    }

    #[test]
    fn semantic_extensions() {
        let chain = af(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(
            ranking_extensions_semantic(&chain).unwrap(),
            vec![set(&chain, &["a", "c"])]
        );
        let loop3 = af(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]);
        assert_eq!(
            ranking_extensions_semantic(&loop3).unwrap(),
            vec![
                set(&loop3, &["a"]),
                set(&loop3, &["b"]),
                set(&loop3, &["c"])
            ]
        );
        assert_eq!(
            ranking_extensions_semantic(&ArgumentationFramework::empty()).unwrap(),
            vec![ArgumentSet::EMPTY]
        );
    }

    #[test]
    fn derived_attacks() {
        let chain = af(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let model = jz_model(&chain).unwrap();
        let derived = model.derive_attacks().unwrap();
        let expected: std::collections::BTreeSet<_> = chain.attacks().collect();
        assert_eq!(derived, expected);
        assert!(model.is_model_of(&chain));

        let selfish = af(&["a", "b"], &[("a", "a")]);
        let m = jz_model(&selfish).unwrap();
        let d = m.derive_attacks().unwrap();
        for b in 0..2 {
            assert!(d.contains(&(0, b)) && d.contains(&(b, 0)));
        }

        let free = af(&["a", "b"], &[]);
        assert!(jz_model(&free)
            .unwrap()
            .derive_attacks()
            .unwrap()
            .is_empty());
    }

    #[test]
    fn uniform_measure_is_not_a_model() {
        let f = af(&["a", "b"], &[("a", "b")]);
        let space = GenericSpace::new(2).unwrap();
        let m = RankingInstantiationModel::new(
            crate::ranking::RankingMeasure::uniform(space.len()),
            ShallowInstantiation::generic(&space),
        )
        .unwrap();
        assert!(!m.is_model_of(&f));
        assert_eq!(m.derive_attacks(), Err(GenericError::NotAModel));
    }

    #[test]
    fn perturbed_chain_model() {
        let f = pqr();
        let mut model = jz_model(&f).unwrap();
        let i = &model.instantiation;
        let region = &(i.psi(0) & i.psi(2)) & i.phi(1);
        model.measure = model.measure.shift(&region, Rank::TOP);
        assert!(model.is_model_of(&f));
        let mut expected = vec![set(&f, &["p"]), set(&f, &["q"])];
        sort_extensions(&mut expected);
        assert_eq!(model.ranking_extensions(), expected);
    }

    #[test]
    fn rebut_and_undermine() {
        let f = pqr();
        let m = jz_model(&f).unwrap();
        assert!(m.rebuts(0, 1) && m.rebuts(1, 0));
        assert!(!m.rebuts(0, 2));
        // ψ_p ∧ φ_q is possible (q rejected), so no undermining
        assert!(!m.undermines(0, 1));
    }

    #[test]
    fn ill_formed_triples_rejected() {
        let space = GenericSpace::new(1).unwrap();
        let bad = Triple {
            premise: space.psi(0),
            strict: space.phi(0),
            claim: space.phi(0),
        };
        assert_eq!(
            ShallowInstantiation::new(space.len(), vec![bad]),
            Err(GenericError::IllFormedTriple(0))
        );
    }
}
