//! Seeded random words and elements for the property suites.

use rand::Rng;

use crate::base_algebra::BaseKind;
use crate::free_rba::Element;
use crate::rbword::{Alphabet, Factor, Generator, Letter, RBWord};
use crate::scalar::Scalar;

/// Size bounds for random words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordShape {
    pub max_depth: usize,
    pub max_breadth: usize,
    /// Longest monomial used as a letter over the free monoid base.
    pub max_letter_len: usize,
}

impl Default for WordShape {
    fn default() -> Self {
        WordShape {
            max_depth: 3,
            max_breadth: 3,
            max_letter_len: 2,
        }
    }
}

pub struct WordSampler<'a> {
    alphabet: &'a Alphabet,
    base: BaseKind,
    shape: WordShape,
}

impl<'a> WordSampler<'a> {
    pub fn new(alphabet: &'a Alphabet, base: BaseKind, shape: WordShape) -> Self {
        WordSampler { alphabet, base, shape }
    }

    pub fn letter(&self, rng: &mut impl Rng) -> Letter {
        let len = if self.base == BaseKind::FreeMonoid {
            rng.gen_range(1..=self.shape.max_letter_len.max(1))
        } else {
            1
        };
        let n = self.alphabet.len() as u32;
        Letter::new((0..len).map(|_| Generator(rng.gen_range(0..n)))).expect("nonempty")
    }

    pub fn word(&self, rng: &mut impl Rng) -> RBWord {
        self.word_at(rng, self.shape.max_depth)
    }

    /// A word whose depth is at most `depth`.
    pub fn word_at(&self, rng: &mut impl Rng, depth: usize) -> RBWord {
        if depth == 0 {
            return RBWord::letter(self.letter(rng));
        }
        let breadth = rng.gen_range(1..=self.shape.max_breadth.max(1));
        let mut letter = rng.gen_bool(0.5);
        let mut factors = Vec::with_capacity(breadth);
        for _ in 0..breadth {
            factors.push(if letter {
                Factor::Letter(self.letter(rng))
            } else {
                let inner_depth = rng.gen_range(0..depth);
                Factor::Bracket(self.word_at(rng, inner_depth))
            });
            letter = !letter;
        }
        RBWord::from_factors(factors).expect("factors alternate")
    }

    /// `[w]` for a random `w` of depth below the bound.
    pub fn bracket_word(&self, rng: &mut impl Rng) -> RBWord {
        let inner = rng.gen_range(0..self.shape.max_depth.max(1));
        RBWord::bracket(self.word_at(rng, inner))
    }

    /// Up to `max_terms` random words with small nonzero integer coefficients.
    pub fn element(&self, rng: &mut impl Rng, max_terms: usize) -> Element {
        loop {
            let terms = rng.gen_range(1..=max_terms.max(1));
            let mut out = Element::zero();
            for _ in 0..terms {
                let c = small_nonzero(rng);
                out.add_term(self.word(rng), c);
            }
            if !out.is_zero() {
                return out;
            }
        }
    }
}

/// A uniform integer in `-3..=3` other than zero.
pub fn small_nonzero(rng: &mut impl Rng) -> Scalar {
    let v = rng.gen_range(1..=3);
    Scalar::from_int(if rng.gen_bool(0.5) { v } else { -v })
}

/// A uniform integer in `-3..=3`.
pub fn small_int(rng: &mut impl Rng) -> Scalar {
    Scalar::from_int(rng.gen_range(-3..=3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_bounds() {
        let a = Alphabet::new(["x", "y", "z"]).unwrap();
        let s = WordSampler::new(&a, BaseKind::ZeroProduct, WordShape::default());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let w = s.word(&mut rng);
            assert!(w.depth() <= 3);
            assert!(w.breadth() <= 3);
            let mut ok = true;
            w.for_each_letter(&mut |l| ok &= l.len() == 1);
            assert!(ok);
            assert!(s.bracket_word(&mut rng).as_bracket().is_some());
        }
    }

    #[test]
    fn deterministic_for_a_seed() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let s = WordSampler::new(&a, BaseKind::FreeMonoid, WordShape::default());
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20).map(|_| s.word(&mut rng).render(&a)).collect::<Vec<_>>()
        };
        assert_eq!(draw(5), draw(5));
        assert_ne!(draw(5), draw(6));
    }
}
