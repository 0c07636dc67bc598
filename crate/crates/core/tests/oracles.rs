mod common;

use common::{brute_force_jz, compact_instantiation, constructed_measure, full_instantiation};
use rankarg::generic::{
    delta_base, generic_delta, jz_measure, ranking_extensions_semantic, GenericSpace,
    ShallowInstantiation,
};
use rankarg::jz::{extension_weight, jz_extensions};
use rankarg::ranking::jj_search;
use rankarg::{corpus, ArgumentSet, ArgumentationFramework};

fn all_frameworks(n: usize) -> impl Iterator<Item = ArgumentationFramework> {
    let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    (0u64..1 << (n * n)).map(move |bits| {
        let attacks = (0..n * n)
            .filter(|k| bits >> k & 1 == 1)
            .map(|k| (k / n, k % n));
        ArgumentationFramework::from_indices(names.clone(), attacks).unwrap()
    })
}

#[test]
fn closed_form_equals_construction_exhaustively() {
    for n in 0..=3 {
        let space = GenericSpace::new(n).unwrap();
        let inst = ShallowInstantiation::generic(&space);
        for f in all_frameworks(n) {
            assert_eq!(
                jz_measure(&f, &space),
                constructed_measure(&f, &inst),
                "{f}"
            );
        }
    }
}

#[test]
fn jz_model_is_the_unique_jj_model_on_small_frameworks() {
    let mut frameworks: Vec<ArgumentationFramework> = (0..=2).flat_map(all_frameworks).collect();
    frameworks.extend([
        corpus::simple_reinstatement(),
        corpus::three_loop(),
        corpus::attack_on_two_loop(),
        corpus::attack_from_two_loop(),
        corpus::three_one_loop(),
        corpus::two_loop_chain(),
    ]);
    for f in frameworks {
        let space = GenericSpace::new(f.len()).unwrap();
        let inst = ShallowInstantiation::generic(&space);
        let base = delta_base(&generic_delta(&f), &inst);
        let found = jj_search(&base, 2);
        assert_eq!(found.len(), 1, "{f}: {} JJ models", found.len());
        assert_eq!(found[0].measure, jz_measure(&f, &space), "{f}");
    }
}

#[test]
fn direct_solver_matches_brute_force() {
    for n in 0..=3 {
        for f in all_frameworks(n) {
            assert_eq!(jz_extensions(&f), brute_force_jz(&f), "{f}");
            assert_eq!(
                ranking_extensions_semantic(&f).unwrap(),
                jz_extensions(&f),
                "{f}"
            );
        }
    }
    for f in corpus::random_corpus(99, 150, 6) {
        assert_eq!(jz_extensions(&f), brute_force_jz(&f), "{f}");
    }
}

#[test]
fn compact_space_agrees_with_full_space() {
    for f in corpus::random_corpus(5, 60, 4) {
        let n = f.len();
        let compact = compact_instantiation(n);
        let full = full_instantiation(n);
        let rc = constructed_measure(&f, &compact);
        let rf = constructed_measure(&f, &full);
        for s in f.arguments().subsets() {
            assert_eq!(
                rc.rank_of(&compact.theta_set(s)),
                rf.rank_of(&full.theta_set(s)),
                "{f} θ {s:?}"
            );
            for e in s.subsets() {
                assert_eq!(
                    rc.rank_of(&compact.psi_set(s, e).unwrap()),
                    rf.rank_of(&full.psi_set(s, e).unwrap()),
                    "{f} ψ {s:?} {e:?}"
                );
            }
        }
    }
}

#[test]
fn weights_of_sets_outside_plus_are_infinite() {
    let f = corpus::three_one_loop();
    let a = f.set_of(["a"]).unwrap();
    assert!(extension_weight(&f, a).is_top());
    assert!(extension_weight(&f, ArgumentSet::EMPTY).is_finite());
}
