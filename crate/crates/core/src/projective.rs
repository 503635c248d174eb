//! Decreasing ideal sequences, the semaphore codes of their levels, and the
//! connecting maps between levels.
//!
//! Only finite levels are materialized. Level `k` is `J_k = I_1 ∩ … ∩ I_k`
//! and its code is the set of suffix-minimal elements of `J_k`. For
//! `k ≥ m`, `φ_km` sends a code word of level `k` to its unique suffix in
//! the code of level `m`.
//!
//! Action preservation is read as a commuting square: for `u` in the level
//! `k` code and a letter `a`, normalizing `ua` at level `k` and then
//! mapping down gives the same word as mapping `u` down, appending `a` and
//! normalizing at level `m`. Normalizing means taking the shortest suffix
//! lying in the ideal, which is the unique suffix lying in the code.

use std::collections::BTreeSet;

use crate::error::{parse_err, Error, Result};
use crate::turing::{res_ell_ideal, ResetOracle, ResetSide, TuringMachine};
use crate::words::{minimal_elements, Alphabet, CodeSet, Ideal, Letter, Side, Word};

#[derive(Clone, Debug)]
pub struct IdealSequence {
    alphabet: Alphabet,
    ideals: Vec<Ideal>,
    levels: Vec<Ideal>,
}

impl IdealSequence {
    /// Two-sided, non-empty ideals over one alphabet, listed by level.
    pub fn new(alphabet: &Alphabet, ideals: Vec<Ideal>) -> Result<Self> {
        let mut levels: Vec<Ideal> = Vec::with_capacity(ideals.len());
        for (i, ideal) in ideals.iter().enumerate() {
            if ideal.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch);
            }
            if ideal.side() != Side::TwoSided {
                return Err(Error::Invalid(format!("ideal {} is not two-sided", i + 1)));
            }
            if ideal.generators().is_some_and(|g| g.is_empty()) {
                return Err(Error::Invalid(format!("ideal {} is empty", i + 1)));
            }
            let level = match levels.last() {
                Some(prev) => prev.meet(ideal)?,
                None => ideal.clone(),
            };
            levels.push(level);
        }
        Ok(IdealSequence {
            alphabet: alphabet.clone(),
            ideals,
            levels,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    /// `J_k`, 1-based.
    pub fn level(&self, k: usize) -> Result<&Ideal> {
        if k == 0 || k > self.levels.len() {
            return Err(Error::Invalid(format!(
                "level {k} outside 1..={}",
                self.levels.len()
            )));
        }
        Ok(&self.levels[k - 1])
    }

    /// Reads `alphabet: …` and then ideal blocks separated by `---` lines.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut alphabet = None;
        let mut blocks = vec![String::new()];
        let mut starts = vec![0usize];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if alphabet.is_none() {
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let rest = line
                    .strip_prefix("alphabet:")
                    .ok_or_else(|| parse_err(i + 1, "expected `alphabet:` header"))?;
                let names: Vec<&str> = rest.split_whitespace().collect();
                alphabet =
                    Some(Alphabet::new(&names).map_err(|e| parse_err(i + 1, e.to_string()))?);
                starts[0] = i + 1;
                continue;
            }
            if line == "---" {
                blocks.push(String::new());
                starts.push(i + 1);
            } else {
                let b = blocks.last_mut().expect("one block");
                b.push_str(raw);
                b.push('\n');
            }
        }
        let alphabet = alphabet.ok_or_else(|| parse_err(1, "missing `alphabet:` header"))?;
        let mut ideals = Vec::new();
        for (block, start) in blocks.iter().zip(&starts) {
            if block.trim().is_empty() {
                continue;
            }
            let ideal = Ideal::from_text(&alphabet, block).map_err(|e| match e {
                Error::Parse { line, msg } => parse_err(start + line, msg),
                other => other,
            })?;
            ideals.push(ideal);
        }
        IdealSequence::new(&alphabet, ideals)
    }

    pub fn to_text(&self) -> Result<String> {
        let mut s = format!("alphabet: {}\n", self.alphabet.names().join(" "));
        for (i, ideal) in self.ideals.iter().enumerate() {
            if i > 0 {
                s.push_str("---\n");
            }
            s.push_str(&ideal.to_text()?);
        }
        Ok(s)
    }
}

/// Semaphore code of level `k`, truncated at `cap`.
pub fn code_at(seq: &IdealSequence, k: usize, cap: usize) -> Result<CodeSet> {
    minimal_elements(seq.level(k)?, cap)
}

/// The unique suffix of `w` in `code`, with `Ok(None)` when there is none.
fn unique_suffix(code: &CodeSet, w: &Word) -> Result<Option<Word>> {
    let mut found = code.suffixes_in(w);
    let first = found.next();
    if found.next().is_some() {
        return Err(Error::NotSuffixCode(code.alphabet().render(w)));
    }
    Ok(first)
}

/// Shortest suffix of `w` lying in `ideal`.
fn normalize(ideal: &Ideal, w: &Word) -> Option<Word> {
    (0..=w.len())
        .map(|i| w.suffix(i))
        .find(|s| ideal.contains(s))
}

/// `φ_km(u)`.
pub fn phi(seq: &IdealSequence, k: usize, m: usize, u: &Word, cap: usize) -> Result<Word> {
    if m > k {
        return Err(Error::Invalid(format!(
            "φ needs k ≥ m, got k = {k}, m = {m}"
        )));
    }
    if u.len() > cap {
        return Err(Error::CapTooSmall {
            cap,
            needed: u.len(),
        });
    }
    let a = seq.alphabet();
    if !code_at(seq, k, cap)?.contains(u) {
        return Err(Error::Invalid(format!(
            "`{}` is not in the level {k} code",
            a.render(u)
        )));
    }
    unique_suffix(&code_at(seq, m, cap)?, u)?.ok_or_else(|| {
        Error::Invalid(format!(
            "`{}` has no suffix in the level {m} code",
            a.render(u)
        ))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A code word of level `m` that no level `k` code word maps onto.
    NotOnto { k: usize, m: usize, word: Word },
    /// A code word of level `k` without a unique suffix in level `m`.
    NoSuffix { k: usize, m: usize, word: Word },
    /// Two or more suffixes in the level `m` code.
    SuffixCodeBreach { k: usize, m: usize, word: Word },
    /// The normalized action square does not commute.
    Action {
        k: usize,
        m: usize,
        word: Word,
        letter: Letter,
    },
    /// `φ_lm ∘ φ_kl ≠ φ_km`.
    Composition {
        k: usize,
        l: usize,
        m: usize,
        word: Word,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveReport {
    pub cap: usize,
    /// Code size per level.
    pub code_sizes: Vec<usize>,
    pub violations: Vec<Violation>,
    /// Code words not hit within `cap` at levels whose code is truncated.
    pub unverified: Vec<(usize, usize, Word)>,
}

impl ProjectiveReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks surjectivity, the action square and composition for every pair
/// of levels, using code words up to `cap`.
pub fn verify_projective_system(seq: &IdealSequence, cap: usize) -> Result<ProjectiveReport> {
    let n = seq.len();
    let codes: Vec<CodeSet> = (1..=n)
        .map(|k| code_at(seq, k, cap))
        .collect::<Result<_>>()?;
    let complete: Vec<bool> = (1..=n)
        .map(|k| seq.level(k).map(Ideal::is_cofinite))
        .collect::<Result<_>>()?;
    let mut report = ProjectiveReport {
        cap,
        code_sizes: codes.iter().map(CodeSet::len).collect(),
        violations: Vec::new(),
        unverified: Vec::new(),
    };
    // maps[k][m] holds φ_km on the level k code, for m ≤ k (0-based)
    let mut maps: Vec<Vec<std::collections::BTreeMap<Word, Word>>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut row = Vec::with_capacity(k + 1);
        for m in 0..=k {
            let mut map = std::collections::BTreeMap::new();
            let mut image = BTreeSet::new();
            for u in codes[k].words() {
                match unique_suffix(&codes[m], u) {
                    Ok(Some(s)) => {
                        image.insert(s.clone());
                        map.insert(u.clone(), s);
                    }
                    Ok(None) => report.violations.push(Violation::NoSuffix {
                        k: k + 1,
                        m: m + 1,
                        word: u.clone(),
                    }),
                    Err(_) => report.violations.push(Violation::SuffixCodeBreach {
                        k: k + 1,
                        m: m + 1,
                        word: u.clone(),
                    }),
                }
            }
            for s in codes[m].words().difference(&image) {
                if complete[k] {
                    report.violations.push(Violation::NotOnto {
                        k: k + 1,
                        m: m + 1,
                        word: s.clone(),
                    });
                } else {
                    report.unverified.push((k + 1, m + 1, s.clone()));
                }
            }
            row.push(map);
        }
        maps.push(row);
    }
    for k in 0..n {
        let jk = seq.level(k + 1)?;
        for m in 0..=k {
            let jm = seq.level(m + 1)?;
            for (u, image) in &maps[k][m] {
                for a in seq.alphabet().letters() {
                    let left = normalize(jk, &u.push(a)).and_then(|v| normalize(jm, &v));
                    let right = normalize(jm, &image.push(a));
                    if left.is_none() || left != right {
                        report.violations.push(Violation::Action {
                            k: k + 1,
                            m: m + 1,
                            word: u.clone(),
                            letter: a,
                        });
                    }
                }
            }
            for l in m..=k {
                for (u, via_l) in &maps[k][l] {
                    let composed = maps[l][m].get(via_l);
                    if composed != maps[k][m].get(u) {
                        report.violations.push(Violation::Composition {
                            k: k + 1,
                            l: l + 1,
                            m: m + 1,
                            word: u.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `I_k = RRes_k(T)` for `k = 1..=levels`, as cofinite ideals of `Ω*`.
pub fn turing_sequence(
    tm: &TuringMachine,
    levels: usize,
    oracle: &dyn ResetOracle,
) -> Result<IdealSequence> {
    let ideals = (1..=levels)
        .map(|k| res_ell_ideal(tm, ResetSide::Right, k, oracle))
        .collect::<Result<Vec<_>>>()?;
    IdealSequence::new(tm.omega(), ideals)
}
