//! Finite A-graphs: determinism, completeness, reset words, morphisms and
//! finite certificates for properties stated over left-infinite paths.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{parse_err, Error, Result};
use crate::uf::UnionFind;
use crate::words::{Alphabet, Letter, Word};

/// A finite graph with edges labelled by letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AGraph {
    alphabet: Alphabet,
    names: Vec<String>,
    edges: BTreeSet<(usize, Letter, usize)>,
}

/// The three finite certificates for a `(-ω)`-reset graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinusOmegaCertificates {
    pub trim: bool,
    pub deterministic_mw: bool,
    pub complete_mw: bool,
}

impl MinusOmegaCertificates {
    pub fn all(&self) -> bool {
        self.trim && self.deterministic_mw && self.complete_mw
    }
}

impl AGraph {
    /// Vertices are named `0..n`.
    pub fn new(
        alphabet: &Alphabet,
        n: usize,
        edges: impl IntoIterator<Item = (usize, Letter, usize)>,
    ) -> Result<Self> {
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::with_names(alphabet, names, edges)
    }

    pub fn with_names(
        alphabet: &Alphabet,
        names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, Letter, usize)>,
    ) -> Result<Self> {
        let n = names.len();
        if names.iter().collect::<HashSet<_>>().len() != n {
            return Err(Error::Invalid("duplicate vertex name".into()));
        }
        let mut set = BTreeSet::new();
        for (p, a, q) in edges {
            if p >= n || q >= n {
                return Err(Error::Invalid(format!(
                    "edge endpoint out of range: ({p}, {a}, {q})"
                )));
            }
            if a as usize >= alphabet.len() {
                return Err(Error::UnknownLetter(a.to_string()));
            }
            set.insert((p, a, q));
        }
        Ok(AGraph {
            alphabet: alphabet.clone(),
            names,
            edges: set,
        })
    }

    /// Deterministic complete graph from a transition table `table[p][a]`.
    pub fn from_table(alphabet: &Alphabet, table: &[Vec<usize>]) -> Result<Self> {
        let edges = table.iter().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .map(move |(a, &q)| (p, a as Letter, q))
        });
        Self::new(alphabet, table.len(), edges)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn edges(&self) -> &BTreeSet<(usize, Letter, usize)> {
        &self.edges
    }

    pub fn is_deterministic(&self) -> bool {
        let mut seen = HashSet::new();
        self.edges.iter().all(|&(p, a, _)| seen.insert((p, a)))
    }

    pub fn is_complete(&self) -> bool {
        let out: HashSet<(usize, Letter)> = self.edges.iter().map(|&(p, a, _)| (p, a)).collect();
        (0..self.vertex_count()).all(|p| self.alphabet.letters().all(|a| out.contains(&(p, a))))
    }

    pub fn is_strongly_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let fwd = self.adjacency(false);
        let bwd = self.adjacency(true);
        reach(&fwd, [0]).iter().all(|&r| r) && reach(&bwd, [0]).iter().all(|&r| r)
    }

    fn adjacency(&self, reverse: bool) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(p, _, q) in &self.edges {
            if reverse {
                adj[q].push(p);
            } else {
                adj[p].push(q);
            }
        }
        adj
    }

    /// Transition table of a deterministic complete graph.
    pub fn table(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_deterministic() || !self.is_complete() {
            return Err(Error::Invalid(
                "graph must be deterministic and complete".into(),
            ));
        }
        let mut t = vec![vec![0; self.alphabet.len()]; self.vertex_count()];
        for &(p, a, q) in &self.edges {
            t[p][a as usize] = q;
        }
        Ok(t)
    }

    pub fn run(&self, p: usize, u: &Word) -> Result<usize> {
        let t = self.table()?;
        Ok(u.0.iter().fold(p, |s, &a| t[s][a as usize]))
    }

    /// Vertices occurring at the end of some left-infinite path, that is,
    /// reachable from a cycle.
    pub fn infinite_past(&self) -> Vec<bool> {
        on_or_after_cycle(&self.adjacency(false))
    }

    pub fn is_reset_word(&self, u: &Word) -> Result<bool> {
        let t = self.table()?;
        let mut img: Vec<usize> = (0..self.vertex_count()).collect();
        for &a in &u.0 {
            img = image(&t, &img, a);
        }
        Ok(img.len() == 1)
    }

    /// All reset words of length at most `cap`, in shortlex order.
    pub fn reset_words_upto(&self, cap: usize) -> Result<BTreeSet<Word>> {
        let t = self.table()?;
        let full: Vec<usize> = (0..self.vertex_count()).collect();
        // continuations of length ≤ rem making an image a singleton
        let mut memo: HashMap<(Vec<usize>, usize), Vec<Word>> = HashMap::new();
        let conts = continuations(&t, self.alphabet.len(), &full, cap, &mut memo);
        Ok(conts.into_iter().collect())
    }

    /// Whether every word of length `k` is a reset word.
    pub fn is_k_reset(&self, k: usize) -> Result<bool> {
        let t = self.table()?;
        let full: Vec<usize> = (0..self.vertex_count()).collect();
        let level = images_at_depth(&t, self.alphabet.len(), full, k);
        Ok(level.iter().all(|s| s.len() == 1))
    }

    /// `p μ^(k) q` iff some `u ∈ A^k` leads from vertices with an infinite
    /// past to both `p` and `q`. Returned as sorted pairs.
    pub fn mu_k(&self, k: usize) -> Result<BTreeSet<(usize, usize)>> {
        let t = self.table()?;
        let c: Vec<usize> = self
            .infinite_past()
            .iter()
            .enumerate()
            .filter(|x| *x.1)
            .map(|x| x.0)
            .collect();
        let mut rel = BTreeSet::new();
        for s in images_at_depth(&t, self.alphabet.len(), c, k) {
            for &p in &s {
                for &q in &s {
                    rel.insert((p, q));
                }
            }
        }
        Ok(rel)
    }

    /// Block labels of the reflexive-transitive closure of `μ^(k)`.
    pub fn mu_closure(&self, k: usize) -> Result<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertex_count());
        for (p, q) in self.mu_k(k)? {
            uf.union(p, q);
        }
        Ok(uf.labels())
    }

    pub fn minus_omega_certificates(&self) -> MinusOmegaCertificates {
        let n = self.vertex_count();
        let past = self.infinite_past();
        let trim = past.iter().all(|&b| b);
        // pair graph over all pairs; an off-diagonal pair at the end of a
        // left-infinite path gives two paths with one label and two ends
        let mut by_label: HashMap<Letter, Vec<(usize, usize)>> = HashMap::new();
        for &(p, a, q) in &self.edges {
            by_label.entry(a).or_default().push((p, q));
        }
        let mut pair_adj = vec![Vec::new(); n * n];
        for es in by_label.values() {
            for &(p1, q1) in es {
                for &(p2, q2) in es {
                    pair_adj[p1 * n + p2].push(q1 * n + q2);
                }
            }
        }
        let pair_past = on_or_after_cycle(&pair_adj);
        let deterministic_mw = (0..n * n).all(|i| i / n == i % n || !pair_past[i]);
        // by König's lemma every left-infinite word labels a path iff every
        // finite word labels a path
        let t: Vec<Vec<Vec<usize>>> = {
            let mut t = vec![vec![Vec::new(); self.alphabet.len()]; n];
            for &(p, a, q) in &self.edges {
                t[p][a as usize].push(q);
            }
            t
        };
        let start: Vec<usize> = (0..n).collect();
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        let mut complete_mw = n > 0;
        while let Some(s) = queue.pop_front() {
            if !complete_mw {
                break;
            }
            for a in 0..self.alphabet.len() {
                let img: BTreeSet<usize> =
                    s.iter().flat_map(|&p| t[p][a].iter().copied()).collect();
                if img.is_empty() {
                    complete_mw = false;
                    break;
                }
                let img: Vec<usize> = img.into_iter().collect();
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        MinusOmegaCertificates {
            trim,
            deterministic_mw,
            complete_mw,
        }
    }

    /// Reads `alphabet:`, `vertices:` and `edge: p a q` lines.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut alphabet = None;
        let mut names: Option<Vec<String>> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err(i + 1, "expected `key: value`"))?;
            let toks: Vec<&str> = rest.split_whitespace().collect();
            match key.trim() {
                "alphabet" => {
                    alphabet =
                        Some(Alphabet::new(&toks).map_err(|e| parse_err(i + 1, e.to_string()))?)
                }
                "vertices" => names = Some(toks.iter().map(|s| s.to_string()).collect()),
                "edge" => {
                    let (Some(a), Some(v)) = (&alphabet, &names) else {
                        return Err(parse_err(i + 1, "edge before alphabet and vertices"));
                    };
                    let [p, x, q] = toks[..] else {
                        return Err(parse_err(i + 1, "expected `edge: p a q`"));
                    };
                    let idx = |s: &str| {
                        v.iter()
                            .position(|n| n == s)
                            .ok_or_else(|| parse_err(i + 1, format!("unknown vertex `{s}`")))
                    };
                    let l = a.letter(x).map_err(|e| parse_err(i + 1, e.to_string()))?;
                    edges.push((idx(p)?, l, idx(q)?));
                }
                other => return Err(parse_err(i + 1, format!("unknown key `{other}`"))),
            }
        }
        let alphabet = alphabet.ok_or_else(|| parse_err(1, "missing alphabet"))?;
        let names = names.ok_or_else(|| parse_err(1, "missing vertices"))?;
        AGraph::with_names(&alphabet, names, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "alphabet: {}\nvertices: {}\n",
            self.alphabet.names().join(" "),
            self.names.join(" ")
        );
        for &(p, a, q) in &self.edges {
            s.push_str(&format!(
                "edge: {} {} {}\n",
                self.names[p],
                self.alphabet.name(a),
                self.names[q]
            ));
        }
        s
    }
}

fn image(t: &[Vec<usize>], s: &[usize], a: Letter) -> Vec<usize> {
    let set: BTreeSet<usize> = s.iter().map(|&p| t[p][a as usize]).collect();
    set.into_iter().collect()
}

fn images_at_depth(t: &[Vec<usize>], m: usize, start: Vec<usize>, k: usize) -> HashSet<Vec<usize>> {
    let mut level = HashSet::from([start]);
    for _ in 0..k {
        level = level
            .iter()
            .flat_map(|s| (0..m).map(move |a| image(t, s, a as Letter)))
            .collect();
    }
    level
}

fn continuations(
    t: &[Vec<usize>],
    m: usize,
    img: &[usize],
    rem: usize,
    memo: &mut HashMap<(Vec<usize>, usize), Vec<Word>>,
) -> Vec<Word> {
    if let Some(v) = memo.get(&(img.to_vec(), rem)) {
        return v.clone();
    }
    let mut out = Vec::new();
    if img.len() == 1 {
        out.push(Word::empty());
    }
    if rem > 0 {
        for a in 0..m as Letter {
            let next = image(t, img, a);
            for w in continuations(t, m, &next, rem - 1, memo) {
                out.push(w.prepend(a));
            }
        }
    }
    memo.insert((img.to_vec(), rem), out.clone());
    out
}

fn reach(adj: &[Vec<usize>], start: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut stack: Vec<usize> = start.into_iter().collect();
    for &s in &stack {
        seen[s] = true;
    }
    while let Some(p) = stack.pop() {
        for &q in &adj[p] {
            if !seen[q] {
                seen[q] = true;
                stack.push(q);
            }
        }
    }
    seen
}

/// Vertices lying on a cycle or reachable from one.
fn on_or_after_cycle(adj: &[Vec<usize>]) -> Vec<bool> {
    // peel off vertices with no incoming edge from the remaining graph; what
    // survives has arbitrarily long incoming paths
    let n = adj.len();
    let mut indeg = vec![0usize; n];
    for qs in adj {
        for &q in qs {
            indeg[q] += 1;
        }
    }
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&p| indeg[p] == 0).collect();
    while let Some(p) = stack.pop() {
        alive[p] = false;
        for &q in &adj[p] {
            indeg[q] -= 1;
            if indeg[q] == 0 {
                stack.push(q);
            }
        }
    }
    alive
}

/// A vertex map `f` with `(p,a,q) ∈ E ⇒ (f(p),a,f(q)) ∈ E'`, if one exists.
pub fn find_morphism(g: &AGraph, h: &AGraph) -> Option<Vec<usize>> {
    if g.alphabet != h.alphabet {
        return None;
    }
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    if h.vertex_count() == 0 {
        return None;
    }
    let target: HashSet<(usize, Letter, usize)> = h.edges.iter().copied().collect();
    let h_det = h.is_deterministic();
    let mut h_succ: HashMap<(usize, Letter), usize> = HashMap::new();
    if h_det {
        for &(p, a, q) in &h.edges {
            h_succ.insert((p, a), q);
        }
    }
    let mut out_edges = vec![Vec::new(); n];
    let mut in_edges = vec![Vec::new(); n];
    for &(p, a, q) in &g.edges {
        out_edges[p].push((a, q));
        in_edges[q].push((p, a));
    }
    let ctx = MorphCtx {
        target: &target,
        h_det,
        h_succ: &h_succ,
        out_edges: &out_edges,
        in_edges: &in_edges,
        m: h.vertex_count(),
    };
    let mut f = vec![None; n];
    if ctx.search(&mut f) {
        Some(f.into_iter().map(|x| x.expect("assigned")).collect())
    } else {
        None
    }
}

struct MorphCtx<'a> {
    target: &'a HashSet<(usize, Letter, usize)>,
    h_det: bool,
    h_succ: &'a HashMap<(usize, Letter), usize>,
    out_edges: &'a [Vec<(Letter, usize)>],
    in_edges: &'a [Vec<(usize, Letter)>],
    m: usize,
}

impl MorphCtx<'_> {
    fn search(&self, f: &mut Vec<Option<usize>>) -> bool {
        let Some(p) = f.iter().position(|x| x.is_none()) else {
            return true;
        };
        for c in 0..self.m {
            let mut trial = f.clone();
            if self.assign(&mut trial, p, c) && self.search(&mut trial) {
                *f = trial;
                return true;
            }
        }
        false
    }

    /// Assigns `p ↦ c` and everything it forces; false on a conflict.
    fn assign(&self, f: &mut [Option<usize>], p: usize, c: usize) -> bool {
        let mut stack = vec![(p, c)];
        while let Some((p, c)) = stack.pop() {
            match f[p] {
                Some(d) if d == c => continue,
                Some(_) => return false,
                None => f[p] = Some(c),
            }
            for &(a, q) in &self.out_edges[p] {
                match f[q] {
                    Some(d) => {
                        if !self.target.contains(&(c, a, d)) {
                            return false;
                        }
                    }
                    None if self.h_det => match self.h_succ.get(&(c, a)) {
                        Some(&d) => stack.push((q, d)),
                        None => return false,
                    },
                    None => {}
                }
            }
            for &(r, a) in &self.in_edges[p] {
                if let Some(d) = f[r] {
                    if !self.target.contains(&(d, a, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ab() -> Alphabet {
        Alphabet::binary()
    }

    fn perm2() -> AGraph {
        AGraph::from_table(&ab(), &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn basic_properties() {
        let one = AGraph::from_table(&ab(), &[vec![0, 0]]).unwrap();
        assert!(one.is_deterministic() && one.is_complete() && one.is_strongly_connected());
        let empty = AGraph::new(&ab(), 2, []).unwrap();
        assert!(!empty.is_complete());
        assert!(!empty.is_strongly_connected());
        let nd = AGraph::new(&ab(), 2, [(0, 0, 0), (0, 0, 1)]).unwrap();
        assert!(!nd.is_deterministic());
        assert!(nd.is_reset_word(&Word::empty()).is_err());
    }

    #[test]
    fn reset_words() {
        let one = AGraph::from_table(&ab(), &[vec![0, 0]]).unwrap();
        assert_eq!(one.reset_words_upto(2).unwrap().len(), 7);
        assert!(one.is_reset_word(&Word::empty()).unwrap());
        assert!(perm2().reset_words_upto(5).unwrap().is_empty());
        for k in 0..5 {
            assert!(!perm2().is_k_reset(k).unwrap());
        }
        // a merges both vertices into 0
        let g = AGraph::from_table(&ab(), &[vec![0, 1], vec![0, 0]]).unwrap();
        let r = g.reset_words_upto(2).unwrap();
        let expected: BTreeSet<Word> = ["a", "ba", "aa", "ab"]
            .iter()
            .map(|s| ab().parse_word(s).unwrap())
            .collect();
        assert_eq!(r, expected);
        assert!(!g.is_k_reset(2).unwrap());
        let last_letter = AGraph::from_table(&ab(), &[vec![0, 1], vec![0, 1]]).unwrap();
        assert!(!last_letter.is_k_reset(0).unwrap());
        assert!(last_letter.is_k_reset(1).unwrap());
    }

    #[test]
    fn certificates() {
        let a = Alphabet::new(&["a"]).unwrap();
        let loops = AGraph::new(&a, 2, [(0, 0, 0), (1, 0, 1)]).unwrap();
        let c = loops.minus_omega_certificates();
        assert!(c.trim && c.complete_mw && !c.deterministic_mw);
        let source = AGraph::new(&a, 2, [(0, 0, 1), (1, 0, 1)]).unwrap();
        assert!(!source.minus_omega_certificates().trim);
        // a diagonal pair feeding an off-diagonal pair
        let split = AGraph::new(
            &a,
            3,
            [(0, 0, 0), (0, 0, 1), (0, 0, 2), (1, 0, 1), (2, 0, 2)],
        )
        .unwrap();
        assert!(!split.minus_omega_certificates().deterministic_mw);
        let one = AGraph::from_table(&ab(), &[vec![0, 0]]).unwrap();
        assert!(one.minus_omega_certificates().all());
        let partial = AGraph::new(&ab(), 1, [(0, 0, 0)]).unwrap();
        assert!(!partial.minus_omega_certificates().complete_mw);
    }

    #[test]
    fn morphisms() {
        let p = perm2();
        assert_eq!(find_morphism(&p, &p).map(|f| f.len()), Some(2));
        let one = AGraph::from_table(&ab(), &[vec![0, 0]]).unwrap();
        assert_eq!(find_morphism(&p, &one), Some(vec![0, 0]));
        assert_eq!(find_morphism(&one, &p), None);
    }

    #[test]
    fn mu_relations() {
        // every vertex ends a left-infinite path with any label
        let id = AGraph::from_table(&ab(), &[vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(id.mu_k(2).unwrap().len(), 4);
        assert_eq!(
            perm2().mu_k(3).unwrap(),
            BTreeSet::from([(0, 0), (0, 1), (1, 0), (1, 1)])
        );
        assert_eq!(perm2().mu_closure(3).unwrap(), vec![0, 0]);
        let g = AGraph::from_table(&ab(), &[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(
            g.mu_k(1).unwrap(),
            BTreeSet::from([(0, 0), (0, 1), (1, 0), (1, 1)])
        );
        assert_eq!(g.mu_closure(2).unwrap(), vec![0, 0]);
        let last_letter = AGraph::from_table(&ab(), &[vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(last_letter.mu_closure(1).unwrap(), vec![0, 1]);
    }

    #[test]
    fn text_round_trip() {
        let g = AGraph::from_table(&ab(), &[vec![0, 1], vec![0, 0]]).unwrap();
        let back = AGraph::from_text(&g.to_text()).unwrap();
        assert_eq!(back, g);
        assert!(matches!(
            AGraph::from_text("alphabet: a b\nvertices: 0\nedge: 0 c 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    fn table_strategy() -> impl Strategy<Value = Vec<Vec<usize>>> {
        (1usize..6)
            .prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(0..n, 2), n))
    }

    /// Paths of length `k` ending at each vertex whose start has an infinite past.
    fn mu_brute(g: &AGraph, k: usize) -> BTreeSet<(usize, usize)> {
        let past = g.infinite_past();
        let mut rel = BTreeSet::new();
        for u in g.alphabet().words_of_len(k) {
            let ends: Vec<usize> = (0..g.vertex_count())
                .filter(|&r| past[r])
                .map(|r| g.run(r, &u).unwrap())
                .collect();
            for &p in &ends {
                for &q in &ends {
                    rel.insert((p, q));
                }
            }
        }
        rel
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn k_reset_is_monotone(t in table_strategy(), k in 0usize..4) {
            let g = AGraph::from_table(&ab(), &t).unwrap();
            if g.is_k_reset(k).unwrap() {
                prop_assert!(g.is_k_reset(k + 1).unwrap());
            }
        }

        #[test]
        fn reset_words_form_an_ideal(t in table_strategy()) {
            let g = AGraph::from_table(&ab(), &t).unwrap();
            let r = g.reset_words_upto(4).unwrap();
            for w in ab().words_upto(4) {
                prop_assert_eq!(r.contains(&w), g.is_reset_word(&w).unwrap());
            }
            for u in r.iter().filter(|u| u.len() <= 2) {
                for x in ab().words_upto(1) {
                    for y in ab().words_upto(1) {
                        prop_assert!(r.contains(&x.concat(u).concat(&y)));
                    }
                }
            }
        }

        #[test]
        fn certified_graphs_are_deterministic_and_complete(
            n in 1usize..5,
            edges in proptest::collection::vec((0usize..4, 0u16..2, 0usize..4), 0..12),
        ) {
            let edges: Vec<_> = edges.into_iter().filter(|&(p, _, q)| p < n && q < n).collect();
            let g = AGraph::new(&ab(), n, edges).unwrap();
            if g.minus_omega_certificates().all() {
                prop_assert!(g.is_deterministic() && g.is_complete());
            }
        }

        #[test]
        fn mu_matches_path_enumeration(t in table_strategy(), k in 1usize..4) {
            let g = AGraph::from_table(&ab(), &t).unwrap();
            prop_assert_eq!(g.mu_k(k).unwrap(), mu_brute(&g, k));
        }

        #[test]
        fn mu_closure_is_decreasing(t in table_strategy(), k in 1usize..4) {
            let g = AGraph::from_table(&ab(), &t).unwrap();
            let (coarse, fine) = (g.mu_closure(k).unwrap(), g.mu_closure(k + 1).unwrap());
            for p in 0..t.len() {
                for q in 0..t.len() {
                    if fine[p] == fine[q] {
                        prop_assert_eq!(coarse[p], coarse[q]);
                    }
                }
            }
        }

        #[test]
        fn morphisms_compose(a in table_strategy(), b in table_strategy(), c in table_strategy()) {
            let (ga, gb, gc) = (
                AGraph::from_table(&ab(), &a).unwrap(),
                AGraph::from_table(&ab(), &b).unwrap(),
                AGraph::from_table(&ab(), &c).unwrap(),
            );
            if let (Some(f), Some(g)) = (find_morphism(&ga, &gb), find_morphism(&gb, &gc)) {
                let fg: Vec<usize> = f.iter().map(|&x| g[x]).collect();
                for &(p, l, q) in ga.edges() {
                    prop_assert!(gc.edges().contains(&(fg[p], l, fg[q])));
                }
                prop_assert!(find_morphism(&ga, &gc).is_some());
            }
        }
    }
}
