//! Left-infinite words `…x₃x₂x₁` with the suffix metric `d(x,y) = 2^-|lcs(x,y)|`.
//!
//! Positions are counted from the right end, starting at 1. Eventually
//! periodic words `p^{-ω}t` are kept in a canonical form so that equality is
//! structural; anything else is a rule, queried up to a fixed depth.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word, EPSILON};

pub const DEFAULT_DEPTH_BOUND: usize = 4096;

type Rule = Arc<dyn Fn(usize) -> Letter + Send + Sync>;

#[derive(Clone)]
enum Repr {
    Periodic {
        period: Word,
        tail: Word,
    },
    Rule {
        name: String,
        rule: Rule,
        bound: usize,
        tail: Word,
    },
}

#[derive(Clone)]
pub struct LeftInfiniteWord {
    alphabet: Alphabet,
    repr: Repr,
}

impl fmt::Debug for LeftInfiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Periodic { .. } => write!(f, "{}", self.to_text().unwrap_or_default()),
            Repr::Rule { name, tail, .. } => {
                write!(f, "rule:{}·{}", name, self.alphabet.render(tail))
            }
        }
    }
}

impl PartialEq for LeftInfiniteWord {
    /// Structural equality; only meaningful for eventually periodic words.
    fn eq(&self, other: &Self) -> bool {
        match (&self.repr, &other.repr) {
            (Repr::Periodic { period: p, tail: t }, Repr::Periodic { period: q, tail: s }) => {
                self.alphabet == other.alphabet && p == q && t == s
            }
            _ => false,
        }
    }
}

/// Suffix distance. `Pow(m)` is `2^-m`; `AtMost(d)` means the words agree on
/// the last `d` letters and nothing more was examined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Zero,
    Pow(usize),
    AtMost(usize),
}

impl Distance {
    pub fn value(self) -> f64 {
        match self {
            Distance::Zero => 0.0,
            Distance::Pow(m) | Distance::AtMost(m) => 2f64.powi(-(m.min(i32::MAX as usize) as i32)),
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, Distance::AtMost(_))
    }
}

fn primitive_root(w: &Word) -> Word {
    let n = w.len();
    for p in 1..=n {
        if n.is_multiple_of(p) && (p..n).all(|i| w.0[i] == w.0[i - p]) {
            return w.prefix(p);
        }
    }
    w.clone()
}

fn canonical(period: &Word, tail: &Word) -> (Word, Word) {
    let mut period = primitive_root(period);
    let mut start = 0;
    // a leading tail letter equal to the period's first letter continues the period
    while start < tail.len() && tail.0[start] == period.0[0] {
        period.0.rotate_left(1);
        start += 1;
    }
    (period, Word(tail.0[start..].to_vec()))
}

impl LeftInfiniteWord {
    /// `period^{-ω} · tail`, canonicalized.
    pub fn periodic(alphabet: &Alphabet, period: Word, tail: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        if !alphabet.contains_word(&period) || !alphabet.contains_word(&tail) {
            return Err(Error::AlphabetMismatch);
        }
        let (period, tail) = canonical(&period, &tail);
        Ok(LeftInfiniteWord {
            alphabet: alphabet.clone(),
            repr: Repr::Periodic { period, tail },
        })
    }

    /// `u^{-ω}`.
    pub fn power(alphabet: &Alphabet, u: Word) -> Result<Self> {
        Self::periodic(alphabet, u, Word::empty())
    }

    /// A word given by `letter_at(i)`, the letter at distance `i ≥ 1` from the
    /// right end. Queries beyond `depth_bound` are errors.
    pub fn rule<F>(alphabet: &Alphabet, name: &str, depth_bound: usize, letter_at: F) -> Self
    where
        F: Fn(usize) -> Letter + Send + Sync + 'static,
    {
        LeftInfiniteWord {
            alphabet: alphabet.clone(),
            repr: Repr::Rule {
                name: name.to_string(),
                rule: Arc::new(letter_at),
                bound: depth_bound,
                tail: Word::empty(),
            },
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_eventually_periodic(&self) -> bool {
        matches!(self.repr, Repr::Periodic { .. })
    }

    /// `(period, tail)` of the canonical form.
    pub fn parts(&self) -> Option<(&Word, &Word)> {
        match &self.repr {
            Repr::Periodic { period, tail } => Some((period, tail)),
            Repr::Rule { .. } => None,
        }
    }

    /// `(name, tail)` of a rule-based word `r·tail`.
    pub fn rule_parts(&self) -> Option<(&str, &Word)> {
        match &self.repr {
            Repr::Periodic { .. } => None,
            Repr::Rule { name, tail, .. } => Some((name, tail)),
        }
    }

    /// Deepest queryable position; `None` when unbounded.
    pub fn depth_bound(&self) -> Option<usize> {
        match &self.repr {
            Repr::Periodic { .. } => None,
            Repr::Rule { bound, tail, .. } => Some(bound + tail.len()),
        }
    }

    /// Letter at distance `i ≥ 1` from the right end.
    pub fn letter_at(&self, i: usize) -> Result<Letter> {
        assert!(i >= 1, "positions start at 1");
        let (tail, rest) = match &self.repr {
            Repr::Periodic { tail, .. } | Repr::Rule { tail, .. } => {
                (tail, i.checked_sub(tail.len() + 1))
            }
        };
        let Some(j) = rest else {
            return Ok(tail.0[tail.len() - i]);
        };
        match &self.repr {
            Repr::Periodic { period, .. } => {
                let p = period.len();
                Ok(period.0[p - 1 - j % p])
            }
            Repr::Rule { rule, bound, .. } => {
                if j + 1 > *bound {
                    return Err(Error::DepthExceeded {
                        requested: i,
                        bound: bound + tail.len(),
                    });
                }
                Ok(rule(j + 1))
            }
        }
    }

    /// `ξ_k`, the suffix of length `k`.
    pub fn xi(&self, k: usize) -> Result<Word> {
        let mut v = (1..=k)
            .rev()
            .map(|i| self.letter_at(i))
            .collect::<Result<Vec<_>>>()?;
        v.shrink_to_fit();
        Ok(Word(v))
    }

    /// The right action `x·u`.
    pub fn append(&self, u: &Word) -> Result<Self> {
        if !self.alphabet.contains_word(u) {
            return Err(Error::AlphabetMismatch);
        }
        match &self.repr {
            Repr::Periodic { period, tail } => {
                Self::periodic(&self.alphabet, period.clone(), tail.concat(u))
            }
            Repr::Rule {
                name,
                rule,
                bound,
                tail,
            } => Ok(LeftInfiniteWord {
                alphabet: self.alphabet.clone(),
                repr: Repr::Rule {
                    name: name.clone(),
                    rule: rule.clone(),
                    bound: *bound,
                    tail: tail.concat(u),
                },
            }),
        }
    }

    /// Whether `u` is a suffix. Needs `|u|` within the depth bound.
    pub fn has_suffix(&self, u: &Word) -> Result<bool> {
        Ok(self.xi(u.len())? == *u)
    }

    /// Longest common suffix, examined to at most `depth` letters. The
    /// boolean is true when the words differ within that range, i.e. the
    /// length is exact.
    pub fn lcs_upto(&self, other: &Self, depth: usize) -> Result<(usize, bool)> {
        for i in 1..=depth {
            if self.letter_at(i)? != other.letter_at(i)? {
                return Ok((i - 1, true));
            }
        }
        Ok((depth, false))
    }

    /// Exact lcs length of two distinct eventually periodic words. Past
    /// `max tail + p + q` letters of agreement the periodic parts coincide.
    fn periodic_lcs(&self, other: &Self) -> Option<usize> {
        let (p, t) = self.parts()?;
        let (q, s) = other.parts()?;
        if self == other {
            return None;
        }
        let bound = t.len().max(s.len()) + p.len() + q.len();
        let (m, exact) = self
            .lcs_upto(other, bound)
            .expect("periodic words are unbounded");
        debug_assert!(
            exact,
            "distinct canonical forms differ within the Fine-Wilf bound"
        );
        Some(m)
    }

    pub fn distance(&self, other: &Self, depth: usize) -> Result<Distance> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if self.is_eventually_periodic() && other.is_eventually_periodic() {
            return Ok(match self.periodic_lcs(other) {
                None => Distance::Zero,
                Some(m) => Distance::Pow(m),
            });
        }
        let (m, exact) = self.lcs_upto(other, depth)?;
        Ok(if exact {
            Distance::Pow(m)
        } else {
            Distance::AtMost(depth)
        })
    }

    /// Exact lcs for eventually periodic pairs (`None` if equal).
    pub fn lcs_exact(&self, other: &Self) -> Option<Word> {
        let m = self.periodic_lcs(other)?;
        Some(self.xi(m).expect("periodic"))
    }

    /// `per:(p) tail:t`.
    pub fn to_text(&self) -> Result<String> {
        match &self.repr {
            Repr::Periodic { period, tail } => Ok(format!(
                "per:({}) tail:{}",
                self.alphabet.render(period),
                self.alphabet.render(tail)
            )),
            Repr::Rule { name, .. } => Err(Error::Invalid(format!(
                "rule-based word `{name}` is not serializable"
            ))),
        }
    }

    pub fn from_text(alphabet: &Alphabet, s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("expected `per:(…) tail:…`, got `{s}`"));
        let rest = s.trim().strip_prefix("per:(").ok_or_else(bad)?;
        let (period, rest) = rest.split_once(')').ok_or_else(bad)?;
        let tail = rest.trim().strip_prefix("tail:").ok_or_else(bad)?.trim();
        let tail = if tail.is_empty() { EPSILON } else { tail };
        Self::periodic(
            alphabet,
            alphabet.parse_word(period)?,
            alphabet.parse_word(tail)?,
        )
    }
}
