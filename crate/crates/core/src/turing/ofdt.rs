//! Exhaustive comparison of `β^(ω)` with its reconstruction from the output
//! function.

use std::collections::HashMap;

use super::{lsc_prefix, output_function, rsc_suffix, Config, ResetOracle, TuringMachine};
use crate::error::Result;
use crate::words::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OfdtMismatch {
    pub u: Word,
    pub x: Letter,
    pub v: Word,
    pub direct: Letter,
    pub via_output: Option<Letter>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OfdtReport {
    /// Legal triples `(u, X, v)` compared.
    pub triples: u64,
    /// Distinct words `uXv` simulated.
    pub words: u64,
    /// Distinct arguments of the output function evaluated.
    pub phi_entries: usize,
    pub mismatch_count: u64,
    /// The first few mismatches.
    pub mismatches: Vec<OfdtMismatch>,
}

struct Tables {
    base: usize,
    rsc: Vec<u32>,
    lsc: Vec<u32>,
    rsc_words: Vec<Word>,
    lsc_words: Vec<Word>,
}

fn code(base: usize, w: &[Letter]) -> usize {
    w.iter().fold(0, |acc, &s| acc * base + s as usize + 1)
}

/// Code-suffix and code-prefix ids for every legal word of length ≤ `k`.
fn tables(tm: &TuringMachine, oracle: &dyn ResetOracle, k: usize) -> Result<Tables> {
    let base = tm.omega().len() + 1;
    let size = base.pow(k as u32 + 1);
    let mut t = Tables {
        base,
        rsc: vec![u32::MAX; size],
        lsc: vec![u32::MAX; size],
        rsc_words: Vec::new(),
        lsc_words: Vec::new(),
    };
    let mut rsc_ids: HashMap<Word, u32> = HashMap::new();
    let mut lsc_ids: HashMap<Word, u32> = HashMap::new();
    let mut level = vec![Word::empty()];
    for len in 0..=k {
        for w in &level {
            let c = code(base, &w.0);
            let r = rsc_suffix(tm, w, oracle)?;
            let n = rsc_ids.len() as u32;
            t.rsc[c] = *rsc_ids.entry(r.clone()).or_insert_with(|| {
                t.rsc_words.push(r);
                n
            });
            let r2 = lsc_prefix(tm, w, oracle)?;
            let n = lsc_ids.len() as u32;
            t.lsc[c] = *lsc_ids.entry(r2.clone()).or_insert_with(|| {
                t.lsc_words.push(r2);
                n
            });
        }
        if len == k {
            break;
        }
        let mut next = Vec::new();
        for w in &level {
            for s in tm.omega().letters() {
                let x = w.push(s);
                if tm.is_legal(&x) {
                    next.push(x);
                }
            }
        }
        level = next;
    }
    Ok(t)
}

/// Compares `β^(ω)(u, X, v)` computed directly with the value obtained
/// from `φ_T` for every legal `uXv` with `|u|, |v| ≤ k`.
pub fn verify_output_determination(
    tm: &TuringMachine,
    oracle: &dyn ResetOracle,
    k: usize,
    max_steps: usize,
) -> Result<OfdtReport> {
    let t = tables(tm, oracle, k)?;
    let mut report = OfdtReport::default();
    let mut phi: HashMap<(u32, Letter, u32), Option<Letter>> = HashMap::new();
    let m = tm.omega().len() as Letter;
    let mut word: Vec<Letter> = Vec::with_capacity(2 * k + 1);
    let mut cfg = Config {
        cells: Vec::new(),
        head: None,
        offset: 0,
    };
    // iterative DFS over legal words; `next[d]` is the next symbol to try at depth d
    let mut next: Vec<Letter> = vec![0];
    while let Some(&s) = next.last() {
        if s == m {
            next.pop();
            word.pop();
            continue;
        }
        *next.last_mut().expect("non-empty") += 1;
        word.push(s);
        if !tm.is_legal_slice(&word) {
            word.pop();
            continue;
        }
        report.words += 1;
        let n = word.len();
        cfg.cells.clear();
        cfg.head = None;
        cfg.offset = 0;
        for (i, &s) in word.iter().enumerate() {
            cfg.cells.push(tm.letter_of(s));
            if let Some(q) = tm.state_of(s) {
                cfg.head = Some((i, q));
            }
        }
        tm.run_to_halt(&mut cfg, max_steps)?;
        for p in n.saturating_sub(k + 1)..=k.min(n - 1) {
            let direct = tm.symbol_at(&cfg, p);
            let rid = t.rsc[code(t.base, &word[..p])];
            let lid = t.lsc[code(t.base, &word[p + 1..])];
            let x = word[p];
            let via = match phi.get(&(rid, x, lid)) {
                Some(&v) => v,
                None => {
                    let v = output_function(
                        tm,
                        &t.rsc_words[rid as usize],
                        x,
                        &t.lsc_words[lid as usize],
                        max_steps,
                    )?;
                    phi.insert((rid, x, lid), v);
                    v
                }
            };
            report.triples += 1;
            if via != Some(direct) {
                report.mismatch_count += 1;
                if report.mismatches.len() < 20 {
                    report.mismatches.push(OfdtMismatch {
                        u: Word(word[..p].to_vec()),
                        x,
                        v: Word(word[p + 1..].to_vec()),
                        direct,
                        via_output: via,
                    });
                }
            }
        }
        if n < 2 * k + 1 {
            next.push(0);
        } else {
            word.pop();
        }
    }
    report.phi_entries = phi.len();
    Ok(report)
}
