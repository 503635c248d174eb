//! Finite words, the suffix and prefix orders, codes, and finitely presented
//! ideals of the free monoid together with the ideal-to-code operator.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{parse_err, Error, Result};

pub type Letter = u16;

/// Rendering of the empty word in text formats.
pub const EPSILON: &str = "@eps";

#[derive(Debug)]
struct AlphabetInner {
    names: Vec<String>,
    index: HashMap<String, Letter>,
    single_char: bool,
}

/// Finite ordered alphabet. Letter `i` is the `i`-th name; that order is the
/// one used by every enumeration in this crate.
#[derive(Clone, Debug)]
pub struct Alphabet(Arc<AlphabetInner>);

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() || names.len() > Letter::MAX as usize {
            return Err(Error::BadAlphabet);
        }
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            if n.is_empty() || n.chars().any(char::is_whitespace) || n == EPSILON {
                return Err(Error::BadAlphabet);
            }
            if index.insert(n.to_string(), i as Letter).is_some() {
                return Err(Error::BadAlphabet);
            }
        }
        let names: Vec<String> = names.iter().map(|n| n.as_ref().to_string()).collect();
        let single_char = names.iter().all(|n| n.chars().count() == 1);
        Ok(Alphabet(Arc::new(AlphabetInner {
            names,
            index,
            single_char,
        })))
    }

    /// The alphabet `{a, b}`.
    pub fn binary() -> Self {
        Alphabet::new(&["a", "b"]).expect("static alphabet")
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.0.names[l as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.0
            .index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + Clone {
        0..self.len() as Letter
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        w.0.iter().all(|&l| (l as usize) < self.len())
    }

    /// All words of length exactly `n`, lexicographic in letter order.
    pub fn words_of_len(&self, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * self.len());
            for w in &out {
                for l in self.letters() {
                    next.push(w.push(l));
                }
            }
            out = next;
        }
        out
    }

    /// All words of length at most `cap`, in shortlex order.
    pub fn words_upto(&self, cap: usize) -> Vec<Word> {
        (0..=cap).flat_map(|n| self.words_of_len(n)).collect()
    }

    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return EPSILON.to_string();
        }
        let sep = if self.0.single_char { "" } else { " " };
        w.0.iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses one word. Whitespace-separated tokens are letter names; a token
    /// that is not a letter name is read one character per letter.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s == EPSILON {
            return Ok(Word::empty());
        }
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if let Ok(l) = self.letter(tok) {
                out.push(l);
                continue;
            }
            for c in tok.chars() {
                out.push(self.letter(&c.to_string())?);
            }
        }
        Ok(Word(out))
    }
}

/// A finite word. Ordered shortlex: by length first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&self, l: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(l);
        Word(v)
    }

    pub fn prepend(&self, l: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(l);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The suffix of length `min(k, |w|)`.
    pub fn suffix(&self, k: usize) -> Word {
        let n = self.0.len();
        Word(self.0[n.saturating_sub(k)..].to_vec())
    }

    /// The prefix of length `min(k, |w|)`.
    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k.min(self.0.len())].to_vec())
    }

    /// Drops the first letter (identity on the empty word).
    pub fn tail(&self) -> Word {
        Word(self.0.get(1..).unwrap_or(&[]).to_vec())
    }

    /// Drops the last letter (identity on the empty word).
    pub fn init(&self) -> Word {
        Word(self.0[..self.0.len().saturating_sub(1)].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_suffix_of(&self, v: &Word) -> bool {
        v.0.ends_with(&self.0)
    }

    pub fn is_prefix_of(&self, v: &Word) -> bool {
        v.0.starts_with(&self.0)
    }

    pub fn is_factor_of(&self, v: &Word) -> bool {
        self.0.is_empty()
            || v.0
                .windows(self.0.len())
                .any(|win| win == self.0.as_slice())
    }
}

/// `u ≤_s v`: `u` is a suffix of `v`.
pub fn suffix_leq(u: &Word, v: &Word) -> bool {
    u.is_suffix_of(v)
}

/// `u ≤_p v`: `u` is a prefix of `v`.
pub fn prefix_leq(u: &Word, v: &Word) -> bool {
    u.is_prefix_of(v)
}

/// Longest common suffix.
pub fn lcs(u: &Word, v: &Word) -> Word {
    let n =
        u.0.iter()
            .rev()
            .zip(v.0.iter().rev())
            .take_while(|(a, b)| a == b)
            .count();
    u.suffix(n)
}

/// First pair of distinct suffix-comparable words, if any.
pub fn suffix_comparable_pair<'a, I>(words: I) -> Option<(Word, Word)>
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut sorted: Vec<&Word> = words.into_iter().collect();
    sorted.sort();
    sorted.dedup();
    for (i, u) in sorted.iter().enumerate() {
        for v in &sorted[i + 1..] {
            if u.is_suffix_of(v) {
                return Some(((*u).clone(), (*v).clone()));
            }
        }
    }
    None
}

pub fn is_suffix_code<'a, I>(words: I) -> bool
where
    I: IntoIterator<Item = &'a Word>,
{
    suffix_comparable_pair(words).is_none()
}

pub fn is_prefix_code<'a, I>(words: I) -> bool
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut sorted: Vec<&Word> = words.into_iter().collect();
    sorted.sort();
    sorted.dedup();
    !sorted
        .iter()
        .enumerate()
        .any(|(i, u)| sorted[i + 1..].iter().any(|v| u.is_prefix_of(v)))
}

/// Which kind of ideal: `A*GA*`, `A*G` or `GA*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    TwoSided,
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::TwoSided => "two-sided",
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    pub fn parse(s: &str) -> Option<Side> {
        match s {
            "two-sided" => Some(Side::TwoSided),
            "left" => Some(Side::Left),
            "right" => Some(Side::Right),
            _ => None,
        }
    }

    /// Whether generator `g` generates `w` on this side.
    fn covers(self, g: &Word, w: &Word) -> bool {
        match self {
            Side::TwoSided => g.is_factor_of(w),
            Side::Left => g.is_suffix_of(w),
            Side::Right => g.is_prefix_of(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Body {
    /// Antichain of generators for the side order.
    Generated(Vec<Word>),
    /// The finite complement.
    Cofinite(BTreeSet<Word>),
    /// Intersection of the components (all with the same side).
    Meet(Vec<Ideal>),
}

/// An ideal of `A*`: finitely generated, cofinite, or an intersection of such.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    alphabet: Alphabet,
    side: Side,
    body: Body,
}

fn normalize_generators(side: Side, gens: impl IntoIterator<Item = Word>) -> Vec<Word> {
    let mut gens: Vec<Word> = gens.into_iter().collect();
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Word> = Vec::new();
    // shortlex order: a generator can only be covered by a shorter (earlier) one
    for g in gens {
        if !kept.iter().any(|h| side.covers(h, &g)) {
            kept.push(g);
        }
    }
    kept
}

impl Ideal {
    pub fn generated(
        alphabet: &Alphabet,
        side: Side,
        gens: impl IntoIterator<Item = Word>,
    ) -> Result<Self> {
        let gens = normalize_generators(side, gens);
        if gens.iter().any(|g| !alphabet.contains_word(g)) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(Ideal {
            alphabet: alphabet.clone(),
            side,
            body: Body::Generated(gens),
        })
    }

    /// The ideal `A* \ excluded`. The excluded set must be closed under taking
    /// factors (two-sided), suffixes (left) or prefixes (right).
    pub fn cofinite(
        alphabet: &Alphabet,
        side: Side,
        excluded: impl IntoIterator<Item = Word>,
    ) -> Result<Self> {
        let excluded: BTreeSet<Word> = excluded.into_iter().collect();
        for w in &excluded {
            if !alphabet.contains_word(w) {
                return Err(Error::AlphabetMismatch);
            }
            if w.is_empty() {
                continue;
            }
            let (ok, closure) = match side {
                Side::TwoSided => (
                    excluded.contains(&w.tail()) && excluded.contains(&w.init()),
                    "factors",
                ),
                Side::Left => (excluded.contains(&w.tail()), "suffixes"),
                Side::Right => (excluded.contains(&w.init()), "prefixes"),
            };
            if !ok {
                return Err(Error::BadComplement {
                    side: side.as_str(),
                    closure,
                    word: alphabet.render(w),
                });
            }
        }
        Ok(Ideal {
            alphabet: alphabet.clone(),
            side,
            body: Body::Cofinite(excluded),
        })
    }

    /// `A^* A^k`, all words of length at least `k`.
    pub fn words_of_length_at_least(alphabet: &Alphabet, k: usize) -> Self {
        let excluded = alphabet.words_upto(k.saturating_sub(1));
        let excluded = if k == 0 { Vec::new() } else { excluded };
        Ideal::cofinite(alphabet, Side::TwoSided, excluded).expect("length-closed complement")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_finitely_presented(&self) -> bool {
        !matches!(self.body, Body::Meet(_))
    }

    pub fn contains(&self, w: &Word) -> bool {
        match &self.body {
            Body::Generated(gens) => gens.iter().any(|g| self.side.covers(g, w)),
            Body::Cofinite(ex) => !ex.contains(w),
            Body::Meet(parts) => parts.iter().all(|p| p.contains(w)),
        }
    }

    /// Whether `w` is a minimal element for the side order (all proper
    /// side-subwords lie outside the ideal).
    fn is_side_minimal(&self, w: &Word) -> bool {
        if !self.contains(w) {
            return false;
        }
        if w.is_empty() {
            return true;
        }
        match self.side {
            Side::TwoSided => !self.contains(&w.tail()) && !self.contains(&w.init()),
            Side::Left => !self.contains(&w.tail()),
            Side::Right => !self.contains(&w.init()),
        }
    }

    /// Length bound that every minimal generator of a finitely presented
    /// ideal respects.
    pub fn generator_length_bound(&self) -> usize {
        match &self.body {
            Body::Generated(gens) => gens.iter().map(Word::len).max().unwrap_or(0),
            Body::Cofinite(ex) => ex.iter().map(|w| w.len() + 1).max().unwrap_or(0),
            Body::Meet(parts) => parts
                .iter()
                .map(Ideal::generator_length_bound)
                .max()
                .unwrap_or(0),
        }
    }

    /// The generator antichain when it is finite and known.
    pub fn generators(&self) -> Option<Vec<Word>> {
        match &self.body {
            Body::Generated(gens) => Some(gens.clone()),
            Body::Cofinite(_) => Some(self.generators_upto(self.generator_length_bound())),
            Body::Meet(_) => None,
        }
    }

    /// Minimal generators of length at most `cap`, computed by growing
    /// non-members one letter at a time.
    pub fn generators_upto(&self, cap: usize) -> Vec<Word> {
        let mut out = BTreeSet::new();
        let mut frontier = vec![Word::empty()];
        if self.contains(&Word::empty()) {
            return vec![Word::empty()];
        }
        for _ in 0..cap {
            let mut next = Vec::new();
            for w in &frontier {
                for l in self.alphabet.letters() {
                    // non-members are prefix-closed for two-sided and right ideals,
                    // suffix-closed for left ideals
                    let c = match self.side {
                        Side::Left => w.prepend(l),
                        _ => w.push(l),
                    };
                    if self.contains(&c) {
                        if self.is_side_minimal(&c) {
                            out.insert(c);
                        }
                    } else {
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        out.into_iter().collect()
    }

    /// The complement, when finite. `None` means infinite (or, for
    /// intersections, not established within the exploration bound).
    pub fn finite_complement(&self) -> Option<BTreeSet<Word>> {
        match &self.body {
            Body::Cofinite(ex) => Some(ex.clone()),
            Body::Generated(gens) => {
                if gens.is_empty() {
                    return None;
                }
                let m = gens.iter().map(Word::len).max().unwrap_or(0);
                let side = self.side;
                let mut all = BTreeSet::new();
                let mut level = if self.contains(&Word::empty()) {
                    vec![]
                } else {
                    vec![Word::empty()]
                };
                let mut len = 0usize;
                let mut states_at_m1 = usize::MAX;
                while !level.is_empty() {
                    if len + 1 == m.max(1) {
                        states_at_m1 = level.len();
                    }
                    match side {
                        // a non-member of length m gives infinitely many by extension
                        Side::Left | Side::Right if len >= m => return None,
                        // a non-member window sequence longer than the number of
                        // length-(m-1) non-members repeats a window and can be pumped
                        Side::TwoSided if states_at_m1 != usize::MAX && len > m + states_at_m1 => {
                            return None
                        }
                        _ => {}
                    }
                    all.extend(level.iter().cloned());
                    let mut next = Vec::new();
                    for w in &level {
                        for l in self.alphabet.letters() {
                            let c = if side == Side::Left {
                                w.prepend(l)
                            } else {
                                w.push(l)
                            };
                            if !self.contains(&c) {
                                next.push(c);
                            }
                        }
                    }
                    level = next;
                    len += 1;
                }
                Some(all)
            }
            Body::Meet(parts) => {
                let mut all = BTreeSet::new();
                for p in parts {
                    all.extend(p.finite_complement()?);
                }
                Some(all)
            }
        }
    }

    pub fn is_cofinite(&self) -> bool {
        self.finite_complement().is_some()
    }

    /// Rewrites a cofinite ideal into its complement form.
    pub fn as_cofinite(&self) -> Option<Ideal> {
        let ex = self.finite_complement()?;
        Some(Ideal {
            alphabet: self.alphabet.clone(),
            side: self.side,
            body: Body::Cofinite(ex),
        })
    }

    fn check_compatible(&self, other: &Ideal) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        Ok(())
    }

    /// `I ∪ J`.
    pub fn join(&self, other: &Ideal) -> Result<Ideal> {
        self.check_compatible(other)?;
        let body = match (&self.body, &other.body) {
            (Body::Cofinite(a), Body::Cofinite(b)) => {
                Body::Cofinite(a.intersection(b).cloned().collect())
            }
            (Body::Cofinite(a), _) => {
                Body::Cofinite(a.iter().filter(|w| !other.contains(w)).cloned().collect())
            }
            (_, Body::Cofinite(b)) => {
                Body::Cofinite(b.iter().filter(|w| !self.contains(w)).cloned().collect())
            }
            (Body::Generated(a), Body::Generated(b)) => {
                Body::Generated(normalize_generators(self.side, a.iter().chain(b).cloned()))
            }
            _ => {
                return Err(Error::Invalid(
                    "join of an intersection ideal is not supported".into(),
                ))
            }
        };
        Ok(Ideal {
            alphabet: self.alphabet.clone(),
            side: self.side,
            body,
        })
    }

    /// `I ∩ J`. Two-sided intersections of finitely generated ideals need not
    /// be finitely generated (`⟨aa⟩ ∩ ⟨bb⟩` contains every `aa(ba)^n bb` as a
    /// minimal element), so those stay as an intersection node.
    pub fn meet(&self, other: &Ideal) -> Result<Ideal> {
        self.check_compatible(other)?;
        if self.includes(other) == Some(true) {
            return Ok(other.clone());
        }
        if other.includes(self) == Some(true) {
            return Ok(self.clone());
        }
        let body = match (&self.body, &other.body) {
            (Body::Cofinite(a), Body::Cofinite(b)) => Body::Cofinite(a.union(b).cloned().collect()),
            (Body::Generated(a), Body::Generated(b)) if self.side != Side::TwoSided => {
                // one-sided: a word lies in both iff it has comparable generators
                // of each as suffix (prefix); the longer one is the witness
                let mut gens = Vec::new();
                for g in a {
                    for h in b {
                        if self.side.covers(g, h) {
                            gens.push(h.clone());
                        } else if self.side.covers(h, g) {
                            gens.push(g.clone());
                        }
                    }
                }
                Body::Generated(normalize_generators(self.side, gens))
            }
            _ => {
                let mut parts = Vec::new();
                for i in [self, other] {
                    match &i.body {
                        Body::Meet(ps) => parts.extend(ps.iter().cloned()),
                        _ => parts.push(i.clone()),
                    }
                }
                Body::Meet(parts)
            }
        };
        Ok(Ideal {
            alphabet: self.alphabet.clone(),
            side: self.side,
            body,
        })
    }

    /// `J ⊆ I`, decided from the generators of `J`. `None` when `J` has no
    /// finite generator list.
    pub fn includes(&self, other: &Ideal) -> Option<bool> {
        if self.alphabet != other.alphabet || self.side != other.side {
            return Some(false);
        }
        let gens = other.generators()?;
        Some(gens.iter().all(|g| self.contains(g)))
    }

    /// `J ⊆ I` checked on all words up to length `cap`.
    pub fn includes_upto(&self, other: &Ideal, cap: usize) -> bool {
        other.generators_upto(cap).iter().all(|g| self.contains(g))
    }

    pub fn to_text(&self) -> Result<String> {
        let gens = self.generators().ok_or_else(|| {
            Error::Invalid("intersection ideal has no finite generator list".into())
        })?;
        let mut s = format!("side: {}\n", self.side.as_str());
        for g in gens {
            s.push_str(&self.alphabet.render(&g));
            s.push('\n');
        }
        Ok(s)
    }

    /// Parses `side: …` followed by one generator per line.
    pub fn from_text(alphabet: &Alphabet, text: &str) -> Result<Ideal> {
        let mut side = None;
        let mut gens = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if side.is_none() {
                let rest = line
                    .strip_prefix("side:")
                    .ok_or_else(|| parse_err(i + 1, "expected `side: two-sided|left|right`"))?;
                side =
                    Some(Side::parse(rest.trim()).ok_or_else(|| parse_err(i + 1, "unknown side"))?);
                continue;
            }
            gens.push(
                alphabet
                    .parse_word(line)
                    .map_err(|e| parse_err(i + 1, e.to_string()))?,
            );
        }
        let side = side.ok_or_else(|| parse_err(1, "missing side header"))?;
        Ideal::generated(alphabet, side, gens)
    }
}

/// A finite set of words over an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSet {
    alphabet: Alphabet,
    words: BTreeSet<Word>,
}

impl CodeSet {
    pub fn new(alphabet: &Alphabet, words: impl IntoIterator<Item = Word>) -> Self {
        CodeSet {
            alphabet: alphabet.clone(),
            words: words.into_iter().collect(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn max_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Every suffix of `w` (shortest first) lying in the set.
    pub fn suffixes_in<'a>(&'a self, w: &'a Word) -> impl Iterator<Item = Word> + 'a {
        (0..=w.len())
            .map(move |k| w.suffix(k))
            .filter(move |s| self.words.contains(s))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for w in &self.words {
            s.push_str(&self.alphabet.render(w));
            s.push('\n');
        }
        s
    }

    pub fn from_text(alphabet: &Alphabet, text: &str) -> Result<CodeSet> {
        let mut words = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            words.insert(
                alphabet
                    .parse_word(line)
                    .map_err(|e| parse_err(i + 1, e.to_string()))?,
            );
        }
        Ok(CodeSet::new(alphabet, words))
    }
}

/// The `≤_s`-minimal elements of a left or two-sided ideal, up to length `cap`.
///
/// Non-members are suffix-closed, so the search grows non-members to the left
/// one letter at a time; a member `a·z` with `z` a non-member is minimal.
pub fn minimal_elements(ideal: &Ideal, cap: usize) -> Result<CodeSet> {
    if ideal.side == Side::Right {
        return Err(Error::Invalid(
            "suffix-minimal elements need a left or two-sided ideal".into(),
        ));
    }
    grow_minimal(ideal, cap, true)
}

/// The `≤_p`-minimal elements of a right or two-sided ideal, up to length `cap`.
pub fn minimal_elements_prefix(ideal: &Ideal, cap: usize) -> Result<CodeSet> {
    if ideal.side == Side::Left {
        return Err(Error::Invalid(
            "prefix-minimal elements need a right or two-sided ideal".into(),
        ));
    }
    grow_minimal(ideal, cap, false)
}

fn grow_minimal(ideal: &Ideal, cap: usize, leftwards: bool) -> Result<CodeSet> {
    let needed = ideal.generator_length_bound();
    if cap < needed {
        return Err(Error::CapTooSmall { cap, needed });
    }
    let mut out = BTreeSet::new();
    if ideal.contains(&Word::empty()) {
        out.insert(Word::empty());
        return Ok(CodeSet {
            alphabet: ideal.alphabet.clone(),
            words: out,
        });
    }
    let mut queue = VecDeque::from([Word::empty()]);
    while let Some(z) = queue.pop_front() {
        if z.len() >= cap {
            continue;
        }
        for l in ideal.alphabet.letters() {
            let w = if leftwards { z.prepend(l) } else { z.push(l) };
            if ideal.contains(&w) {
                out.insert(w);
            } else {
                queue.push_back(w);
            }
        }
    }
    Ok(CodeSet {
        alphabet: ideal.alphabet.clone(),
        words: out,
    })
}

/// Suffix code `S` with `SA ⊆ A*S`.
pub fn is_semaphore_code(code: &CodeSet) -> bool {
    is_suffix_code(code.words.iter())
        && code.words.iter().all(|s| {
            code.alphabet.letters().all(|a| {
                let sa = s.push(a);
                (0..=sa.len()).any(|k| code.words.contains(&sa.suffix(k)))
            })
        })
}

/// Prefix code `S` with `AS ⊆ SA*`.
pub fn is_left_semaphore_code(code: &CodeSet) -> bool {
    is_prefix_code(code.words.iter())
        && code.words.iter().all(|s| {
            code.alphabet.letters().all(|a| {
                let as_ = s.prepend(a);
                (0..=as_.len()).any(|k| code.words.contains(&as_.prefix(k)))
            })
        })
}

/// Whether the finite suffix code admits no proper extension. Candidates of
/// length up to `maxlen + 1` suffice: a longer candidate has a suffix of that
/// length which is comparable with the code iff the candidate is.
pub fn is_maximal_suffix_code(code: &CodeSet) -> Result<bool> {
    if let Some((u, v)) = suffix_comparable_pair(code.words.iter()) {
        return Err(Error::NotSuffixCode(format!(
            "{} ≤s {}",
            code.alphabet.render(&u),
            code.alphabet.render(&v)
        )));
    }
    let bound = code.max_len() + 1;
    Ok(code
        .alphabet
        .words_upto(bound)
        .iter()
        .filter(|u| !code.words.contains(u))
        .all(|u| {
            code.words
                .iter()
                .any(|s| s.is_suffix_of(u) || u.is_suffix_of(s))
        }))
}

/// Successor in the order on `{a,b}^k` that compares words at their last
/// differing position, `a < b`. `None` for `b^k`.
pub fn colex_successor(alphabet: &Alphabet, u: &Word) -> Result<Option<Word>> {
    if alphabet.len() != 2 {
        return Err(Error::NonBinaryAlphabet);
    }
    let mut v = u.0.clone();
    // binary increment, least significant letter first
    for l in v.iter_mut() {
        if *l == 0 {
            *l = 1;
            return Ok(Some(Word(v)));
        }
        *l = 0;
    }
    Ok(None)
}

/// The whole chain `u_1 < … < u_{2^k}` of `{a,b}^k`.
pub fn colex_chain(alphabet: &Alphabet, k: usize) -> Result<Vec<Word>> {
    let mut cur = Word(vec![0; k]);
    let mut out = vec![cur.clone()];
    while let Some(next) = colex_successor(alphabet, &cur)? {
        out.push(next.clone());
        cur = next;
    }
    Ok(out)
}
