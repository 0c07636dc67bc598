//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rankarg::generic::{delta_base, generic_delta, GenericSpace, ShallowInstantiation, Triple};
use rankarg::ranking::{construct, Rank, RankingMeasure, WorldSpace};
use rankarg::{sort_extensions, ArgumentSet, ArgumentationFramework};

/// Seed and shape of the shared random corpus.
pub const CORPUS_SEED: u64 = 0x5eed_2024;
pub const CORPUS_SIZE: usize = 500;
pub const CORPUS_MAX_ARGUMENTS: usize = 8;

/// The JZ measure obtained by actually running the shift construction of
/// the generic default base, instead of the closed form.
pub fn constructed_measure(
    framework: &ArgumentationFramework,
    inst: &ShallowInstantiation,
) -> RankingMeasure {
    let defaults = generic_delta(framework);
    let base = delta_base(&defaults, inst);
    let shifts: Vec<Rank> = defaults.iter().map(|d| d.jz_shift(framework)).collect();
    construct(&base, &shifts).expect("one shift per default")
}

/// Generic instantiation over the full space of `2n` atoms `X_i`, `Y_i`
/// (`4^n` worlds), without the compaction of `X_i = ⊥` worlds.
pub fn full_instantiation(n: usize) -> ShallowInstantiation {
    let atoms: Vec<String> = (0..n)
        .flat_map(|i| [format!("X{i}"), format!("Y{i}")])
        .collect();
    let space = WorldSpace::new(atoms).unwrap();
    let triples = (0..n)
        .map(|i| {
            let x = space.atom_at(2 * i);
            let y = space.atom_at(2 * i + 1);
            Triple {
                premise: x.clone(),
                strict: x.clone(),
                claim: &x & &y,
            }
        })
        .collect();
    ShallowInstantiation::new(space.len(), triples).unwrap()
}

pub fn compact_instantiation(n: usize) -> ShallowInstantiation {
    ShallowInstantiation::generic(&GenericSpace::new(n).unwrap())
}

/// JZ extensions by brute force over all subsets of the arguments, ranked
/// by the constructed measure: minimal `R(ψ_{A⁺,E})` among finite ones.
pub fn brute_force_jz(framework: &ArgumentationFramework) -> Vec<ArgumentSet> {
    let inst = compact_instantiation(framework.len());
    let measure = constructed_measure(framework, &inst);
    let plus = framework.non_self_attacking();
    let ranked: Vec<(ArgumentSet, Rank)> = framework
        .arguments()
        .subsets()
        .filter(|e| e.is_subset(plus))
        .map(|e| (e, measure.rank_of(&inst.psi_set(plus, e).unwrap())))
        .collect();
    let best = ranked.iter().map(|&(_, r)| r).min().unwrap();
    let mut out: Vec<ArgumentSet> = ranked
        .into_iter()
        .filter(|&(_, r)| r == best)
        .map(|(e, _)| e)
        .collect();
    sort_extensions(&mut out);
    out
}

/// Frameworks on `0..=max` arguments named `a0, a1, ...` with arbitrary
/// attack relations.
pub fn arb_framework(max: usize) -> impl Strategy<Value = ArgumentationFramework> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
            let attacks = (0..n * n).filter(|&k| bits[k]).map(|k| (k / n, k % n));
            ArgumentationFramework::from_indices(names, attacks).unwrap()
        })
    })
}

/// No set is a proper subset of another.
pub fn is_antichain(sets: &[ArgumentSet]) -> bool {
    sets.iter()
        .all(|&a| sets.iter().all(|&b| a == b || !a.is_subset(b)))
}
