//! Named example frameworks and a seeded random generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::framework::ArgumentationFramework;

fn build(args: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
    ArgumentationFramework::new(args.iter().copied(), attacks.iter().copied())
        .expect("built-in framework is well formed")
}

/// a ▷ b ▷ c
pub fn simple_reinstatement() -> ArgumentationFramework {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "c")])
}

/// a ▷ b ▷ c ▷ a
pub fn three_loop() -> ArgumentationFramework {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
}

/// a ▷ b, with b and c attacking each other.
pub fn attack_on_two_loop() -> ArgumentationFramework {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "b")])
}

/// b ▷ c, with a and b attacking each other.
pub fn attack_from_two_loop() -> ArgumentationFramework {
    build(&["a", "b", "c"], &[("a", "b"), ("b", "a"), ("b", "c")])
}

/// a ▷ b ▷ c ▷ a plus the self-attack a ▷ a.
pub fn three_one_loop() -> ArgumentationFramework {
    build(
        &["a", "b", "c"],
        &[("a", "a"), ("a", "b"), ("b", "c"), ("c", "a")],
    )
}

/// b ▷ c ▷ a with a and b attacking each other.
pub fn three_two_loop() -> ArgumentationFramework {
    build(
        &["a", "b", "c"],
        &[("a", "b"), ("b", "a"), ("b", "c"), ("c", "a")],
    )
}

/// a ⇄ b ⇄ c
pub fn two_loop_chain() -> ArgumentationFramework {
    build(
        &["a", "b", "c"],
        &[("a", "b"), ("b", "a"), ("b", "c"), ("c", "b")],
    )
}

/// a ▷ b ▷ c and a ▷ d ▷ c
pub fn splitted_three_chain() -> ArgumentationFramework {
    build(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("a", "d"), ("d", "c")],
    )
}

/// a ▷ b ▷ c with c and d attacking each other.
pub fn spoon() -> ArgumentationFramework {
    build(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "c")],
    )
}

/// p ▷ q ▷ r
pub fn pqr_chain() -> ArgumentationFramework {
    build(&["p", "q", "r"], &[("p", "q"), ("q", "r")])
}

/// b ▷ c ▷ a ▷ b ▷ a: cumulative transitivity for rejected arguments fails.
pub fn rej_cut_counterexample() -> ArgumentationFramework {
    build(
        &["a", "b", "c"],
        &[("b", "c"), ("c", "a"), ("a", "b"), ("b", "a")],
    )
}

/// The Rej-Cut counterexample plus c ▷ b: cautious monotony fails.
pub fn rej_cm_counterexample() -> ArgumentationFramework {
    build(
        &["a", "b", "c"],
        &[("b", "c"), ("c", "a"), ("a", "b"), ("b", "a"), ("c", "b")],
    )
}

/// The nine worked examples, with their display names.
pub fn named_examples() -> Vec<(&'static str, ArgumentationFramework)> {
    vec![
        ("simple-reinstatement", simple_reinstatement()),
        ("3-loop", three_loop()),
        ("attack-on-2-loop", attack_on_two_loop()),
        ("attack-from-2-loop", attack_from_two_loop()),
        ("3,1-loop", three_one_loop()),
        ("3,2-loop", three_two_loop()),
        ("2-loop-chain", two_loop_chain()),
        ("splitted-3-chain", splitted_three_chain()),
        ("spoon", spoon()),
    ]
}

/// A random framework on `n` arguments `a0..a{n-1}` where every ordered
/// pair (self-attacks included) is an attack with probability `density`.
pub fn random_framework<R: Rng>(rng: &mut R, n: usize, density: f64) -> ArgumentationFramework {
    let names: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let mut attacks = Vec::new();
    for a in 0..n {
        for b in 0..n {
            // self-attacks are rarer so that A⁺ usually stays non-trivial
            let p = if a == b { density / 4.0 } else { density };
            if rng.gen_bool(p) {
                attacks.push((a, b));
            }
        }
    }
    ArgumentationFramework::from_indices(names, attacks).expect("generated names are distinct")
}

/// `count` frameworks with 0..=`max_arguments` arguments and densities
/// drawn from [0.1, 0.6], reproducible from `seed`.
pub fn random_corpus(seed: u64, count: usize, max_arguments: usize) -> Vec<ArgumentationFramework> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=max_arguments);
            let density = rng.gen_range(0.1..0.6);
            random_framework(&mut rng, n, density)
        })
        .collect()
}
