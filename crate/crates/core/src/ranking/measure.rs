use std::fmt;

use super::rank::Rank;
use super::world::Proposition;

/// A ranking measure given by a rank for every world of a finite space.
///
/// The rank of a proposition is the minimum over its worlds (`Top` for the
/// empty proposition). Values produced by shifting need not be normalized;
/// [`RankingMeasure::is_normalized`] reports whether the measure is a proper
/// ranking measure (some world has rank zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankingMeasure {
    ranks: Vec<Rank>,
}

impl RankingMeasure {
    /// The uniform measure over `space_len` worlds.
    pub fn uniform(space_len: usize) -> Self {
        RankingMeasure {
            ranks: vec![Rank::ZERO; space_len],
        }
    }

    pub fn from_ranks(ranks: Vec<Rank>) -> Self {
        RankingMeasure { ranks }
    }

    pub fn space_len(&self) -> usize {
        self.ranks.len()
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub fn world_rank(&self, world: usize) -> Rank {
        self.ranks[world]
    }

    pub fn is_normalized(&self) -> bool {
        self.ranks.iter().min() == Some(&Rank::ZERO)
    }

    pub fn rank_of(&self, prop: &Proposition) -> Rank {
        self.check_space(prop);
        prop.worlds()
            .map(|w| self.ranks[w])
            .min()
            .unwrap_or(Rank::TOP)
    }

    /// `R(consequent | condition) = R(condition ∧ consequent) - R(condition)`,
    /// or `Top` when the condition is impossible.
    pub fn conditional_rank(&self, consequent: &Proposition, condition: &Proposition) -> Rank {
        let base = self.rank_of(condition);
        if base.is_top() {
            return Rank::TOP;
        }
        let joint = self.rank_of(&(condition & consequent));
        joint
            .checked_sub(base)
            .expect("joint rank is never below the rank of the condition")
    }

    /// Truth condition for a single conditional, evaluated on the raw ranks.
    pub fn satisfies(&self, conditional: &Conditional) -> bool {
        let violation = self.rank_of(&conditional.violation());
        match conditional.kind {
            ConditionalKind::Strict => violation.is_top(),
            ConditionalKind::Default => {
                let verification = self.rank_of(&conditional.verification());
                verification + Rank::ONE <= violation
            }
        }
    }

    /// Model check against a whole base. Unnormalized measures are not
    /// ranking measures and satisfy nothing.
    pub fn satisfies_base(&self, base: &DefaultBase) -> bool {
        self.is_normalized() && base.iter().all(|c| self.satisfies(c))
    }

    /// `R + r[region]`: raise every world of `region` by `amount`.
    pub fn shift(&self, region: &Proposition, amount: Rank) -> RankingMeasure {
        self.check_space(region);
        let mut ranks = self.ranks.clone();
        for w in region.worlds() {
            ranks[w] = ranks[w] + amount;
        }
        RankingMeasure { ranks }
    }

    fn check_space(&self, prop: &Proposition) {
        assert_eq!(
            self.space_len(),
            prop.space_len(),
            "proposition and measure live on different world spaces"
        );
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionalKind {
    /// `φ ⊐ ψ`: `φ ∧ ¬ψ` is impossible.
    Strict,
    /// `φ ⇝ ψ`: `φ` plausibly implies `ψ`.
    Default,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Conditional {
    pub kind: ConditionalKind,
    pub antecedent: Proposition,
    pub consequent: Proposition,
}

impl Conditional {
    pub fn default(antecedent: Proposition, consequent: Proposition) -> Self {
        Conditional {
            kind: ConditionalKind::Default,
            antecedent,
            consequent,
        }
    }

    pub fn strict(antecedent: Proposition, consequent: Proposition) -> Self {
        Conditional {
            kind: ConditionalKind::Strict,
            antecedent,
            consequent,
        }
    }

    /// `φ ∧ ψ`
    pub fn verification(&self) -> Proposition {
        &self.antecedent & &self.consequent
    }

    /// `φ ∧ ¬ψ`, the region a construction step may shift.
    pub fn violation(&self) -> Proposition {
        let mut v = self.antecedent.clone();
        v.and_not_assign(&self.consequent);
        v
    }

    /// Whether any model must give the violation region rank `Top`: strict
    /// conditionals, and defaults whose verification region is empty.
    pub fn forces_impossible_violation(&self) -> bool {
        self.kind == ConditionalKind::Strict || self.verification().is_empty()
    }

    pub fn space_len(&self) -> usize {
        self.antecedent.space_len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("conditional #{index} lives on a space of {found} worlds, expected {expected}")]
pub struct SpaceMismatch {
    pub index: usize,
    pub expected: usize,
    pub found: usize,
}

/// A finite, ordered collection of conditionals over one world space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefaultBase {
    space_len: usize,
    conditionals: Vec<Conditional>,
}

impl DefaultBase {
    pub fn new(space_len: usize, conditionals: Vec<Conditional>) -> Result<Self, SpaceMismatch> {
        for (index, c) in conditionals.iter().enumerate() {
            for found in [c.antecedent.space_len(), c.consequent.space_len()] {
                if found != space_len {
                    return Err(SpaceMismatch {
                        index,
                        expected: space_len,
                        found,
                    });
                }
            }
        }
        Ok(DefaultBase {
            space_len,
            conditionals,
        })
    }

    pub fn empty(space_len: usize) -> Self {
        DefaultBase {
            space_len,
            conditionals: Vec::new(),
        }
    }

    pub fn space_len(&self) -> usize {
        self.space_len
    }

    pub fn len(&self) -> usize {
        self.conditionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conditionals.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Conditional> {
        self.conditionals.iter()
    }

    pub fn get(&self, index: usize) -> Option<&Conditional> {
        self.conditionals.get(index)
    }

    pub fn push(&mut self, conditional: Conditional) -> Result<(), SpaceMismatch> {
        let found = conditional.space_len();
        if found != self.space_len || conditional.consequent.space_len() != self.space_len {
            return Err(SpaceMismatch {
                index: self.conditionals.len(),
                expected: self.space_len,
                found,
            });
        }
        self.conditionals.push(conditional);
        Ok(())
    }
}

impl<'a> IntoIterator for &'a DefaultBase {
    type Item = &'a Conditional;
    type IntoIter = std::slice::Iter<'a, Conditional>;

    fn into_iter(self) -> Self::IntoIter {
        self.conditionals.iter()
    }
}

impl fmt::Display for RankingMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.ranks.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}
