use std::collections::{BTreeSet, HashSet, VecDeque};

use super::{CongruenceRepr, RightCongruenceK};
use crate::error::{Error, Result};
use crate::graphs::AGraph;
use crate::words::{minimal_elements, suffix_comparable_pair, Ideal, Letter, Side, Word};

/// Cayley graph of a congruence of finite index. Vertex `i` is block `i`
/// of the finite congruence whose hat-lift is the congruence.
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    pub graph: AGraph,
    pub sigma: RightCongruenceK,
}

pub fn cayley_graph(repr: &CongruenceRepr) -> Result<CayleyGraph> {
    let sigma = repr.as_hat_lift()?;
    let a = sigma.alphabet().clone();
    let blocks = sigma.blocks();
    let names = blocks.iter().map(|b| a.render(&b[0])).collect();
    let mut edges = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let rep = super::index_of(&a, &b[0]);
        for l in a.letters() {
            edges.push((i, l, sigma.labels()[sigma.act(rep, l)]));
        }
    }
    let graph = AGraph::with_names(&a, names, edges)?;
    Ok(CayleyGraph { graph, sigma })
}

/// `Λ_ρ` and `Λ'_ρ` truncated at `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSets {
    pub lambda: BTreeSet<Word>,
    pub lambda_prime: BTreeSet<Word>,
    pub cap: usize,
    /// Nonsingular classes whose lcs is longer than `cap`.
    pub beyond_cap: usize,
}

enum ClassLcs {
    Word(Word),
    Singular,
    BeyondCap,
}

/// Longest suffix shared by every left-infinite path into `q`.
fn class_lcs(g: &AGraph, q: usize, cap: usize) -> ClassLcs {
    let mut s: BTreeSet<usize> = BTreeSet::from([q]);
    let mut w = Vec::new();
    let mut seen = HashSet::new();
    loop {
        if !seen.insert(s.clone()) {
            // one label all the way back: a single left-infinite word
            return ClassLcs::Singular;
        }
        let letters: BTreeSet<Letter> = g
            .edges()
            .iter()
            .filter(|e| s.contains(&e.2))
            .map(|e| e.1)
            .collect();
        if letters.len() != 1 {
            w.reverse();
            return ClassLcs::Word(Word(w));
        }
        if w.len() == cap {
            return ClassLcs::BeyondCap;
        }
        let a = *letters.iter().next().expect("one letter");
        w.push(a);
        s = g
            .edges()
            .iter()
            .filter(|e| e.1 == a && s.contains(&e.2))
            .map(|e| e.0)
            .collect();
    }
}

fn graph_lambda(g: &AGraph, cap: usize) -> Result<LambdaSets> {
    let mut lambda = BTreeSet::new();
    let mut beyond_cap = 0;
    for q in 0..g.vertex_count() {
        match class_lcs(g, q, cap) {
            ClassLcs::Word(w) => {
                lambda.insert(w);
            }
            ClassLcs::Singular => {}
            ClassLcs::BeyondCap => beyond_cap += 1,
        }
    }
    // w ∈ Λ' iff p·aw = p'·bw for some vertices p, p' and letters a ≠ b
    let t = g.table()?;
    let m = g.alphabet().len();
    let n = g.vertex_count();
    let mut start = BTreeSet::new();
    for p in 0..n {
        for q in 0..n {
            for a in 0..m {
                for b in 0..m {
                    if a != b {
                        start.insert((t[p][a], t[q][b]));
                    }
                }
            }
        }
    }
    let mut lambda_prime = BTreeSet::new();
    let mut stack = vec![(Word::empty(), start)];
    while let Some((w, pairs)) = stack.pop() {
        if pairs.iter().any(|(s, t)| s == t) {
            lambda_prime.insert(w.clone());
        }
        if w.len() < cap {
            for c in 0..m {
                let next: BTreeSet<(usize, usize)> =
                    pairs.iter().map(|&(s, u)| (t[s][c], t[u][c])).collect();
                stack.push((w.push(c as Letter), next));
            }
        }
    }
    Ok(LambdaSets {
        lambda,
        lambda_prime,
        cap,
        beyond_cap,
    })
}

pub fn lambda_sets(repr: &CongruenceRepr, cap: usize) -> Result<LambdaSets> {
    match repr {
        CongruenceRepr::SpecialFromIdeal(ideal) if !ideal.is_cofinite() => {
            let code = minimal_elements(ideal, cap)?;
            let prime = ideal
                .alphabet()
                .words_upto(cap)
                .into_iter()
                .filter(|w| ideal.contains(w))
                .collect();
            Ok(LambdaSets {
                lambda: code.words().clone(),
                lambda_prime: prime,
                cap,
                beyond_cap: 0,
            })
        }
        _ => graph_lambda(&cayley_graph(repr)?.graph, cap),
    }
}

/// Reset words of the Cayley graph up to `cap`.
pub fn res_set(repr: &CongruenceRepr, cap: usize) -> Result<BTreeSet<Word>> {
    match repr {
        CongruenceRepr::SpecialFromIdeal(ideal) if !ideal.is_cofinite() => Ok(ideal
            .alphabet()
            .words_upto(cap)
            .into_iter()
            .filter(|w| ideal.contains(w))
            .collect()),
        _ => cayley_graph(repr)?.graph.reset_words_upto(cap),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Longest word examined for Λ.
    pub cap: usize,
    /// Largest depth tried for `μ^[k] = id`.
    pub k_max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub open: bool,
    pub special: Option<bool>,
    /// `Λ_ρ ⊆ Res(ρ)`.
    pub special_via_lambda: Option<bool>,
    /// The three-path condition on the Cayley graph.
    pub special_via_paths: Option<bool>,
    /// Two suffix-comparable elements of `Λ_ρ`, if any.
    pub lambda_comparable: Option<(Word, Word)>,
    pub index: Option<usize>,
    /// Least `k ≤ k_max` with `μ^[k] = id` on the Cayley graph.
    pub profinite_at: Option<usize>,
    pub caps: Caps,
}

/// Whether `p -aw-> q`, `p' -bw-> q`, `p'' -w-> r` with `a ≠ b` force `q = r`.
fn three_path_condition(g: &AGraph) -> Result<bool> {
    let t = g.table()?;
    let n = g.vertex_count();
    let m = g.alphabet().len();
    let enc = |s: usize, u: usize, r: usize| (s * n + u) * n + r;
    let mut seen = vec![false; n * n * n];
    let mut queue = VecDeque::new();
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                for a in 0..m {
                    for b in 0..m {
                        let st = (t[p][a], t[q][b], r);
                        if a != b && !seen[enc(st.0, st.1, st.2)] {
                            seen[enc(st.0, st.1, st.2)] = true;
                            queue.push_back(st);
                        }
                    }
                }
            }
        }
    }
    while let Some((s, u, r)) = queue.pop_front() {
        if s == u && s != r {
            return Ok(false);
        }
        for c in 0..m {
            let st = (t[s][c], t[u][c], t[r][c]);
            if !seen[enc(st.0, st.1, st.2)] {
                seen[enc(st.0, st.1, st.2)] = true;
                queue.push_back(st);
            }
        }
    }
    Ok(true)
}

pub fn classify(repr: &CongruenceRepr, caps: Caps) -> Result<Classification> {
    let mut c = Classification {
        open: false,
        special: None,
        special_via_lambda: None,
        special_via_paths: None,
        lambda_comparable: None,
        index: None,
        profinite_at: None,
        caps,
    };
    match repr {
        CongruenceRepr::RuleFixture(_) => return Ok(c),
        CongruenceRepr::SpecialFromIdeal(ideal) if !ideal.is_cofinite() => {
            c.special = Some(true);
            return Ok(c);
        }
        _ => {}
    }
    let cay = cayley_graph(repr)?;
    let g = &cay.graph;
    c.open = true;
    c.index = Some(g.vertex_count());
    let lam = graph_lambda(g, caps.cap.max(cay.sigma.k()))?;
    c.lambda_comparable = suffix_comparable_pair(lam.lambda.iter());
    if lam.beyond_cap == 0 {
        let mut all = true;
        for w in &lam.lambda {
            all &= g.is_reset_word(w)?;
        }
        c.special_via_lambda = Some(all);
    }
    c.special_via_paths = Some(three_path_condition(g)?);
    c.special = match (c.special_via_lambda, c.special_via_paths) {
        (Some(x), Some(y)) if x != y => {
            return Err(Error::Invalid("special characterizations disagree".into()));
        }
        (x, y) => x.or(y),
    };
    for k in 1..=caps.k_max {
        let labels = g.mu_closure(k)?;
        if labels.iter().enumerate().all(|(i, &l)| l == i) {
            c.profinite_at = Some(k);
            break;
        }
    }
    Ok(c)
}

/// Ideals `I ⊆ I'` with `underline ρ = τ_I` and `overline ρ = τ_{I'}`.
pub fn underline_overline(repr: &CongruenceRepr, cap: usize) -> Result<(Ideal, Ideal)> {
    if let CongruenceRepr::SpecialFromIdeal(ideal) = repr {
        if !ideal.is_cofinite() {
            return Ok((ideal.clone(), ideal.clone()));
        }
    }
    let cay = cayley_graph(repr)?;
    let g = &cay.graph;
    let a = g.alphabet().clone();
    let k = cay.sigma.k();
    // every word of length k is a reset, so Res is cofinite
    let mut nonresets = Vec::new();
    for w in a.words_upto(k.saturating_sub(1)) {
        if !g.is_reset_word(&w)? {
            nonresets.push(w);
        }
    }
    let under = Ideal::cofinite(&a, Side::TwoSided, nonresets)?;
    let lam = graph_lambda(g, cap.max(k))?;
    if lam.beyond_cap > 0 {
        return Err(Error::CapTooSmall {
            cap,
            needed: cap + 1,
        });
    }
    let over = Ideal::generated(&a, Side::TwoSided, lam.lambda)?;
    Ok((under, over))
}
