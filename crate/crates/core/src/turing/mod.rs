//! Deterministic Turing machines read through their tape words.
//!
//! A tape segment is a word over `Ω = Γ ∪ Γ×Q`, where `X^q` marks the head in
//! state `q` on a cell holding `X`. Symbols of `Ω` are letters of an
//! [`Alphabet`] of size `|Γ|(|Q|+1)`: the plain letters come first, then
//! `X^q` at index `|Γ| + q|Γ| + X`, rendered `X@q`.

mod example;
mod ofdt;
mod search;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::words::{Alphabet, CodeSet, Ideal, Letter, Side, Word};

pub use example::{example_machine, example_nonreset_oracle, AnbnOracle};
pub use ofdt::{verify_output_determination, OfdtMismatch, OfdtReport};
pub use search::{is_left_reset_bounded, is_right_reset_bounded, no_flow_certificate};

/// Name of the blank symbol in machine descriptions.
pub const BLANK: &str = "_";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    L,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transition {
    pub next: usize,
    pub write: Letter,
    pub dir: Move,
}

/// One `δ` rule by names: `from read -> to write dir`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub from: String,
    pub read: String,
    pub to: String,
    pub write: String,
    pub dir: Move,
}

impl Rule {
    pub fn new(from: &str, read: &str, to: &str, write: &str, dir: Move) -> Self {
        Rule {
            from: from.into(),
            read: read.into(),
            to: to.into(),
            write: write.into(),
            dir,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TuringMachine {
    states: Vec<String>,
    input: Vec<Letter>,
    tape: Alphabet,
    blank: Letter,
    initial: usize,
    finals: Vec<bool>,
    delta: Vec<Option<Transition>>,
    rules: Vec<Rule>,
    omega: Alphabet,
}

/// How a run from an input ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunVerdict {
    HaltedFinal,
    HaltedNonfinal,
    NotStabilized,
}

impl RunVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            RunVerdict::HaltedFinal => "halted-final",
            RunVerdict::HaltedNonfinal => "halted-nonfinal",
            RunVerdict::NotStabilized => "not-stabilized",
        }
    }
}

/// A mutable tape with at most one head, used by every simulator here.
/// `offset` counts blank cells inserted on the left by singular moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Config {
    pub cells: Vec<Letter>,
    pub head: Option<(usize, usize)>,
    pub offset: usize,
}

impl TuringMachine {
    /// Builds a machine. The blank is the tape letter named `_`.
    pub fn new(
        states: &[String],
        input: &[String],
        tape: &[String],
        initial: &str,
        finals: &[String],
        rules: &[Rule],
    ) -> Result<Self> {
        let tape_alpha = Alphabet::new(tape)
            .map_err(|_| Error::Machine("tape alphabet must be non-empty and distinct".into()))?;
        let blank = tape_alpha
            .letter(BLANK)
            .map_err(|_| Error::Machine(format!("tape alphabet lacks the blank `{BLANK}`")))?;
        let state_idx = |s: &str| {
            states
                .iter()
                .position(|q| q == s)
                .ok_or_else(|| Error::Machine(format!("unknown state `{s}`")))
        };
        if states.is_empty() {
            return Err(Error::Machine("no states".into()));
        }
        let mut seen = BTreeSet::new();
        for q in states {
            if !seen.insert(q)
                || q.is_empty()
                || q.contains('@')
                || q.chars().any(char::is_whitespace)
            {
                return Err(Error::Machine(format!("bad state name `{q}`")));
            }
        }
        let mut input_letters = Vec::new();
        for a in input {
            let l = tape_alpha
                .letter(a)
                .map_err(|_| Error::Machine(format!("input letter `{a}` not on the tape")))?;
            if l == blank {
                return Err(Error::Machine("the blank cannot be an input letter".into()));
            }
            input_letters.push(l);
        }
        let g = tape_alpha.len();
        let mut fin = vec![false; states.len()];
        for f in finals {
            fin[state_idx(f)?] = true;
        }
        let mut delta = vec![None; states.len() * g];
        for r in rules {
            let q = state_idx(&r.from)?;
            let x = tape_alpha
                .letter(&r.read)
                .map_err(|e| Error::Machine(e.to_string()))?;
            let p = state_idx(&r.to)?;
            let y = tape_alpha
                .letter(&r.write)
                .map_err(|e| Error::Machine(e.to_string()))?;
            if y == blank {
                return Err(Error::Machine(format!(
                    "rule `{} {}` writes the blank",
                    r.from, r.read
                )));
            }
            let slot = &mut delta[q * g + x as usize];
            if slot.is_some() {
                return Err(Error::Machine(format!(
                    "two rules for `{} {}`",
                    r.from, r.read
                )));
            }
            *slot = Some(Transition {
                next: p,
                write: y,
                dir: r.dir,
            });
        }
        let mut names: Vec<String> = tape.to_vec();
        for q in states {
            for x in tape {
                names.push(format!("{x}@{q}"));
            }
        }
        let omega =
            Alphabet::new(&names).map_err(|_| Error::Machine("symbol names collide".into()))?;
        Ok(TuringMachine {
            states: states.to_vec(),
            input: input_letters,
            tape: tape_alpha,
            blank,
            initial: state_idx(initial)?,
            finals: fin,
            delta,
            rules: rules.to_vec(),
            omega,
        })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn tape_alphabet(&self) -> &Alphabet {
        &self.tape
    }

    /// The alphabet `Ω`.
    pub fn omega(&self) -> &Alphabet {
        &self.omega
    }

    pub fn input_letters(&self) -> &[Letter] {
        &self.input
    }

    pub fn blank(&self) -> Letter {
        self.blank
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> Vec<usize> {
        (0..self.states.len()).filter(|&q| self.finals[q]).collect()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub(crate) fn gamma(&self) -> usize {
        self.tape.len()
    }

    pub fn delta(&self, q: usize, x: Letter) -> Option<Transition> {
        self.delta[q * self.gamma() + x as usize]
    }

    /// States entered by some move in direction `dir`.
    pub fn move_targets(&self, dir: Move) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .delta
            .iter()
            .flatten()
            .filter(|t| t.dir == dir)
            .map(|t| t.next)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The symbol `X` (`head = None`) or `X^q`.
    pub fn sym(&self, x: Letter, head: Option<usize>) -> Letter {
        match head {
            None => x,
            Some(q) => (self.gamma() * (q + 1)) as Letter + x,
        }
    }

    /// Tape letter of a symbol.
    pub fn letter_of(&self, s: Letter) -> Letter {
        (s as usize % self.gamma()) as Letter
    }

    /// Head state of a symbol, if annotated.
    pub fn state_of(&self, s: Letter) -> Option<usize> {
        let g = self.gamma();
        (s as usize >= g).then(|| s as usize / g - 1)
    }

    pub fn is_blank(&self, s: Letter) -> bool {
        self.letter_of(s) == self.blank
    }

    /// The homomorphism `tape: Ω* → Γ*`.
    pub fn tape_hom(&self, w: &Word) -> Word {
        Word(w.0.iter().map(|&s| self.letter_of(s)).collect())
    }

    /// The homomorphism `heads: Ω* → ℕ`.
    pub fn heads_count(&self, w: &Word) -> usize {
        w.0.iter().filter(|&&s| self.state_of(s).is_some()).count()
    }

    /// Membership in `Leg(T)`: at most one head, tape `B*NB*` with `N` free
    /// of blanks, and a head on a blank must touch `N` (unless `N` is empty).
    pub fn is_legal(&self, w: &Word) -> bool {
        self.is_legal_slice(&w.0)
    }

    pub(crate) fn is_legal_slice(&self, w: &[Letter]) -> bool {
        let mut head = None;
        for (i, &s) in w.iter().enumerate() {
            if self.state_of(s).is_some() {
                if head.is_some() {
                    return false;
                }
                head = Some(i);
            }
        }
        let first = w.iter().position(|&s| !self.is_blank(s));
        let Some(first) = first else { return true };
        let last = w
            .iter()
            .rposition(|&s| !self.is_blank(s))
            .expect("non-blank exists");
        if w[first..=last].iter().any(|&s| self.is_blank(s)) {
            return false;
        }
        !matches!(head, Some(h) if h + 1 < first || h > last + 1)
    }

    pub fn parse_omega(&self, s: &str) -> Result<Word> {
        self.omega.parse_word(s)
    }

    pub fn render(&self, w: &Word) -> String {
        self.omega.render(w)
    }

    pub(crate) fn config(&self, w: &[Letter]) -> Config {
        let mut head = None;
        let cells = w
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                if let Some(q) = self.state_of(s) {
                    head = Some((i, q));
                }
                self.letter_of(s)
            })
            .collect();
        Config {
            cells,
            head,
            offset: 0,
        }
    }

    pub(crate) fn word_of(&self, c: &Config) -> Word {
        let mut v = c.cells.clone();
        if let Some((i, q)) = c.head {
            v[i] = self.sym(v[i], Some(q));
        }
        Word(v)
    }

    /// One move; false when no move applies.
    pub(crate) fn step(&self, c: &mut Config) -> bool {
        let Some((i, q)) = c.head else { return false };
        let Some(t) = self.delta(q, c.cells[i]) else {
            return false;
        };
        c.cells[i] = t.write;
        match t.dir {
            Move::L if i == 0 => {
                c.cells.insert(0, self.blank);
                c.offset += 1;
                c.head = Some((0, t.next));
            }
            Move::L => c.head = Some((i - 1, t.next)),
            Move::R => {
                if i + 1 == c.cells.len() {
                    c.cells.push(self.blank);
                }
                c.head = Some((i + 1, t.next));
            }
        }
        true
    }

    fn require_legal(&self, w: &Word) -> Result<()> {
        if self.is_legal(w) {
            Ok(())
        } else {
            Err(Error::IllegalWord(self.render(w)))
        }
    }

    /// The one-move map `β`.
    pub fn beta(&self, w: &Word) -> Result<Word> {
        self.beta_n(w, 1)
    }

    /// `β^n`.
    pub fn beta_n(&self, w: &Word, n: usize) -> Result<Word> {
        self.require_legal(w)?;
        let mut c = self.config(&w.0);
        for _ in 0..n {
            if !self.step(&mut c) {
                break;
            }
        }
        Ok(self.word_of(&c))
    }

    /// `β^ω`, iterating until `β(w) = w` or `max_steps` moves were made.
    pub fn beta_omega(&self, w: &Word, max_steps: usize) -> Result<Word> {
        self.require_legal(w)?;
        let mut c = self.config(&w.0);
        self.run_to_halt(&mut c, max_steps)?;
        Ok(self.word_of(&c))
    }

    pub(crate) fn run_to_halt(&self, c: &mut Config, max_steps: usize) -> Result<usize> {
        for n in 0..=max_steps {
            if !self.step(c) {
                return Ok(n);
            }
        }
        Err(Error::NotStabilized(max_steps))
    }

    /// `β^(n)(u, X, v)`: the symbol at the position of `X` after `n` moves,
    /// or `None` when `uXv` is illegal.
    pub fn beta_tracked(&self, u: &Word, x: Letter, v: &Word, n: usize) -> Option<Letter> {
        let w = u.push(x).concat(v);
        if !self.is_legal(&w) {
            return None;
        }
        let mut c = self.config(&w.0);
        for _ in 0..n {
            if !self.step(&mut c) {
                break;
            }
        }
        Some(self.symbol_at(&c, u.len()))
    }

    /// `β^(ω)(u, X, v)`.
    pub fn beta_tracked_omega(
        &self,
        u: &Word,
        x: Letter,
        v: &Word,
        max_steps: usize,
    ) -> Result<Option<Letter>> {
        let w = u.push(x).concat(v);
        if !self.is_legal(&w) {
            return Ok(None);
        }
        let mut c = self.config(&w.0);
        self.run_to_halt(&mut c, max_steps)?;
        Ok(Some(self.symbol_at(&c, u.len())))
    }

    pub(crate) fn symbol_at(&self, c: &Config, pos: usize) -> Letter {
        let i = pos + c.offset;
        match c.head {
            Some((h, q)) if h == i => self.sym(c.cells[i], Some(q)),
            _ => c.cells[i],
        }
    }

    /// The starting tape `B·x₀^{q₀}x₁…·B` for an input word over `A`
    /// (`B·B^{q₀}·B` for the empty input).
    pub fn initial_word(&self, input: &Word) -> Word {
        let mut v = vec![self.blank];
        match input.0.split_first() {
            None => v.push(self.sym(self.blank, Some(self.initial))),
            Some((&x, rest)) => {
                v.push(self.sym(x, Some(self.initial)));
                v.extend_from_slice(rest);
            }
        }
        v.push(self.blank);
        Word(v)
    }

    /// Runs an input and records every intermediate tape.
    pub fn run_input(&self, input: &Word, max_steps: usize) -> Result<(Vec<Word>, RunVerdict)> {
        if input.0.iter().any(|l| !self.input.contains(l)) {
            return Err(Error::Machine("input uses a non-input letter".into()));
        }
        let mut c = self.config(&self.initial_word(input).0);
        let mut trace = vec![self.word_of(&c)];
        for _ in 0..max_steps {
            if !self.step(&mut c) {
                let q = c.head.map(|(_, q)| q).expect("initial word has a head");
                let v = if self.finals[q] {
                    RunVerdict::HaltedFinal
                } else {
                    RunVerdict::HaltedNonfinal
                };
                return Ok((trace, v));
            }
            trace.push(self.word_of(&c));
        }
        let mut probe = c.clone();
        if !self.step(&mut probe) {
            let q = c.head.map(|(_, q)| q).expect("head");
            let v = if self.finals[q] {
                RunVerdict::HaltedFinal
            } else {
                RunVerdict::HaltedNonfinal
            };
            return Ok((trace, v));
        }
        Ok((trace, RunVerdict::NotStabilized))
    }

    /// Checks that `β^ω` exists within `budget` moves on every legal word of
    /// length at most `max_len`. Returns the first word that does not settle.
    pub fn check_legal_halting(&self, max_len: usize, budget: usize) -> Option<Word> {
        let mut level = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &level {
                for s in self.omega.letters() {
                    let x = w.push(s);
                    if self.is_legal(&x) {
                        let mut c = self.config(&x.0);
                        if self.run_to_halt(&mut c, budget).is_err() {
                            return Some(x);
                        }
                        next.push(x);
                    }
                }
            }
            level = next;
        }
        None
    }
}

/// Which reset notion a query concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResetSide {
    Right,
    Left,
}

/// Bounds of the reset search: every context word has at most `ctx_len`
/// symbols, and at most `n_max` moves are simulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub ctx_len: usize,
    pub n_max: usize,
}

/// A context showing that `r` is not a reset.
///
/// For a right reset the compared words are `context·r·between·X·outer` and
/// `context_alt·r·between·X·outer`; for a left reset they are
/// `outer·X·between·r·context` and `outer·X·between·r·context_alt`. The
/// symbols tracked at `X` differ after `steps` moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResetWitness {
    pub side: ResetSide,
    pub context: Word,
    pub context_alt: Word,
    pub between: Word,
    pub tracked: Letter,
    pub outer: Word,
    pub steps: usize,
}

impl ResetWitness {
    /// The two `(u, X, v)` triples fed to `β^(n)`.
    pub fn triples(&self, r: &Word) -> [(Word, Letter, Word); 2] {
        let make = |ctx: &Word| match self.side {
            ResetSide::Right => (
                ctx.concat(r).concat(&self.between),
                self.tracked,
                self.outer.clone(),
            ),
            ResetSide::Left => (
                self.outer.clone(),
                self.tracked,
                self.between.concat(r).concat(ctx),
            ),
        };
        [make(&self.context), make(&self.context_alt)]
    }

    /// Recomputes both tracked symbols; `Some` when they are defined and differ.
    pub fn replay(&self, tm: &TuringMachine, r: &Word) -> Option<(Letter, Letter)> {
        let [(u1, x1, v1), (u2, x2, v2)] = self.triples(r);
        let a = tm.beta_tracked(&u1, x1, &v1, self.steps)?;
        let b = tm.beta_tracked(&u2, x2, &v2, self.steps)?;
        (a != b).then_some((a, b))
    }
}

/// Why a word is certainly a reset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResetReason {
    /// Illegal words are resets vacuously.
    Illegal,
    /// Certified by a closed-form oracle.
    Oracle(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResetVerdict {
    Reset(ResetReason),
    NonReset(ResetWitness),
    /// No witness within the bounds. `no_flow` is set when a static argument
    /// shows that no context can ever carry information across the word;
    /// `exhausted` when the internal node budget ran out before the bounds
    /// were fully explored.
    Unknown {
        bounds: Bounds,
        no_flow: bool,
        exhausted: bool,
    },
}

impl ResetVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            ResetVerdict::Reset(_) => "reset",
            ResetVerdict::NonReset(_) => "non-reset",
            ResetVerdict::Unknown { .. } => "unknown",
        }
    }
}

/// A decision procedure for reset membership, complete for some machine.
pub trait ResetOracle: Sync {
    fn name(&self) -> &str;
    /// `Some(true)` if `w ∈ RRes(T)`, `Some(false)` if not, `None` if unknown.
    fn is_right_reset(&self, w: &Word) -> Option<bool>;
    fn is_left_reset(&self, w: &Word) -> Option<bool>;
}

fn oracle_query(
    oracle: &dyn ResetOracle,
    tm: &TuringMachine,
    side: ResetSide,
    w: &Word,
) -> Result<bool> {
    let ans = match side {
        ResetSide::Right => oracle.is_right_reset(w),
        ResetSide::Left => oracle.is_left_reset(w),
    };
    ans.ok_or_else(|| Error::OracleInsufficient(tm.render(w)))
}

/// Membership in `RRes_ℓ(T) = RRes(T) ∪ Ω^ℓΩ*` (or its left dual).
pub fn res_ell_membership(
    tm: &TuringMachine,
    side: ResetSide,
    w: &Word,
    ell: usize,
    oracle: &dyn ResetOracle,
) -> Result<bool> {
    if w.len() >= ell {
        return Ok(true);
    }
    oracle_query(oracle, tm, side, w)
}

/// Non-resets of length below `ell`. They form a factor-closed set, so each
/// level extends the previous one.
pub fn nonresets_below(
    tm: &TuringMachine,
    side: ResetSide,
    ell: usize,
    oracle: &dyn ResetOracle,
) -> Result<Vec<Word>> {
    let mut all = Vec::new();
    if ell == 0 {
        return Ok(all);
    }
    if oracle_query(oracle, tm, side, &Word::empty())? {
        return Ok(all);
    }
    let mut level = vec![Word::empty()];
    all.push(Word::empty());
    for _ in 1..ell {
        let mut next = Vec::new();
        for w in &level {
            for s in tm.omega.letters() {
                let x = w.push(s);
                if !oracle_query(oracle, tm, side, &x)? {
                    next.push(x);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    Ok(all)
}

/// `RRes_ℓ(T)` (or `LRes_ℓ(T)`) as a cofinite two-sided ideal of `Ω*`.
pub fn res_ell_ideal(
    tm: &TuringMachine,
    side: ResetSide,
    ell: usize,
    oracle: &dyn ResetOracle,
) -> Result<Ideal> {
    Ideal::cofinite(
        &tm.omega,
        Side::TwoSided,
        nonresets_below(tm, side, ell, oracle)?,
    )
}

/// `RSC_ℓ(T) = (RSC(T) ∩ Ω^≤ℓ) ∪ Ω(Ω^{ℓ-1} ∖ RRes(T))`, evaluated from the
/// oracle without going through the ideal.
pub fn rsc_ell(tm: &TuringMachine, ell: usize, oracle: &dyn ResetOracle) -> Result<CodeSet> {
    sc_ell(tm, ResetSide::Right, ell, oracle)
}

/// `LSC_ℓ(T) = (LSC(T) ∩ Ω^≤ℓ) ∪ (Ω^{ℓ-1} ∖ LRes(T))Ω`.
pub fn lsc_ell(tm: &TuringMachine, ell: usize, oracle: &dyn ResetOracle) -> Result<CodeSet> {
    sc_ell(tm, ResetSide::Left, ell, oracle)
}

fn sc_ell(
    tm: &TuringMachine,
    side: ResetSide,
    ell: usize,
    oracle: &dyn ResetOracle,
) -> Result<CodeSet> {
    if ell == 0 {
        return Ok(CodeSet::new(&tm.omega, [Word::empty()]));
    }
    let nonres = nonresets_below(tm, side, ell, oracle)?;
    let mut out = BTreeSet::new();
    if nonres.is_empty() {
        out.insert(Word::empty());
        return Ok(CodeSet::new(&tm.omega, out));
    }
    let extend = |z: &Word, s: Letter| match side {
        ResetSide::Right => z.prepend(s),
        ResetSide::Left => z.push(s),
    };
    for z in &nonres {
        for s in tm.omega.letters() {
            let w = extend(z, s);
            // `s·z` with `z` a non-reset is minimal as soon as it lies in
            // RRes_ℓ, which it does at length ℓ regardless of the oracle
            if z.len() + 1 == ell || oracle_query(oracle, tm, side, &w)? {
                out.insert(w);
            }
        }
    }
    Ok(CodeSet::new(&tm.omega, out))
}

/// `φ_T(r, X, r') = β^(ω)(r, X, r')`.
pub fn output_function(
    tm: &TuringMachine,
    r: &Word,
    x: Letter,
    r2: &Word,
    max_steps: usize,
) -> Result<Option<Letter>> {
    tm.beta_tracked_omega(r, x, r2, max_steps)
}

/// `β^(ω)(u, X, v)` through the output function: pad with blanks, cut `Bu`
/// to its suffix in `RSC(T)` and `vB` to its prefix in `LSC(T)`, then apply
/// `φ_T`.
pub fn beta_omega_via_output(
    tm: &TuringMachine,
    u: &Word,
    x: Letter,
    v: &Word,
    oracle: &dyn ResetOracle,
    max_steps: usize,
) -> Result<Option<Letter>> {
    if !tm.is_legal(&u.push(x).concat(v)) {
        return Ok(None);
    }
    let r = rsc_suffix(tm, u, oracle)?;
    let r2 = lsc_prefix(tm, v, oracle)?;
    output_function(tm, &r, x, &r2, max_steps)
}

fn all_plain_blank(tm: &TuringMachine, w: &Word) -> bool {
    w.0.iter().all(|&s| s == tm.blank)
}

/// The suffix of `Bu` in `RSC(T)`, or `ε` when `u ∈ B*`.
pub fn rsc_suffix(tm: &TuringMachine, u: &Word, oracle: &dyn ResetOracle) -> Result<Word> {
    if all_plain_blank(tm, u) {
        return Ok(Word::empty());
    }
    let bu = u.prepend(tm.blank);
    for k in 0..=bu.len() {
        let s = bu.suffix(k);
        if oracle_query(oracle, tm, ResetSide::Right, &s)? {
            return Ok(s);
        }
    }
    Err(Error::OracleInsufficient(format!(
        "no reset suffix of {}",
        tm.render(&bu)
    )))
}

/// The prefix of `vB` in `LSC(T)`, or `ε` when `v ∈ B*`.
pub fn lsc_prefix(tm: &TuringMachine, v: &Word, oracle: &dyn ResetOracle) -> Result<Word> {
    if all_plain_blank(tm, v) {
        return Ok(Word::empty());
    }
    let vb = v.push(tm.blank);
    for k in 0..=vb.len() {
        let s = vb.prefix(k);
        if oracle_query(oracle, tm, ResetSide::Left, &s)? {
            return Ok(s);
        }
    }
    Err(Error::OracleInsufficient(format!(
        "no reset prefix of {}",
        tm.render(&vb)
    )))
}

/// Reads the machine file format: `states:`, `input:`, `tape:`, `initial:`,
/// `final:` and `delta: q a -> p b R` lines.
pub fn parse_machine(text: &str) -> Result<TuringMachine> {
    use crate::error::parse_err;
    let mut states = None;
    let mut input = None;
    let mut tape = None;
    let mut initial = None;
    let mut finals = None;
    let mut rules = Vec::new();
    let words = |s: &str| s.split_whitespace().map(String::from).collect::<Vec<_>>();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let ln = i + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| parse_err(ln, "expected `key: value`"))?;
        let rest = rest.trim();
        match key.trim() {
            "states" => states = Some(words(rest)),
            "input" => input = Some(words(rest)),
            "tape" => tape = Some(words(rest)),
            "initial" => initial = Some(rest.to_string()),
            "final" => finals = Some(words(rest)),
            "delta" => {
                let parts = words(rest);
                if parts.len() != 6 || parts[2] != "->" {
                    return Err(parse_err(ln, "expected `delta: q X -> p Y L|R`"));
                }
                let dir = match parts[5].as_str() {
                    "L" => Move::L,
                    "R" => Move::R,
                    _ => return Err(parse_err(ln, "direction must be L or R")),
                };
                rules.push(Rule::new(&parts[0], &parts[1], &parts[3], &parts[4], dir));
            }
            other => return Err(parse_err(ln, format!("unknown key `{other}`"))),
        }
    }
    let need =
        |v: Option<Vec<String>>, k: &str| v.ok_or_else(|| parse_err(0, format!("missing `{k}:`")));
    let states = need(states, "states")?;
    let input = need(input, "input")?;
    let tape = need(tape, "tape")?;
    let initial = initial.ok_or_else(|| parse_err(0, "missing `initial:`"))?;
    let finals = finals.unwrap_or_default();
    TuringMachine::new(&states, &input, &tape, &initial, &finals, &rules)
}

/// Renders a machine in the file format read by [`parse_machine`].
pub fn machine_to_text(tm: &TuringMachine) -> String {
    let mut s = format!("states: {}\n", tm.states.join(" "));
    let input: Vec<&str> = tm.input.iter().map(|&l| tm.tape.name(l)).collect();
    s += &format!("input: {}\n", input.join(" "));
    s += &format!("tape: {}\n", tm.tape.names().join(" "));
    s += &format!("initial: {}\n", tm.states[tm.initial]);
    let finals: Vec<&str> = tm
        .finals()
        .into_iter()
        .map(|q| tm.states[q].as_str())
        .collect();
    s += &format!("final: {}\n", finals.join(" "));
    for r in &tm.rules {
        let d = if r.dir == Move::L { "L" } else { "R" };
        s += &format!(
            "delta: {} {} -> {} {} {}\n",
            r.from, r.read, r.to, r.write, d
        );
    }
    s
}

#[cfg(test)]
mod tests;
