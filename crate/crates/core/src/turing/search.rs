//! Bounded search for reset witnesses.
//!
//! Everything is laid out in abstract coordinates: the varying context sits
//! at negative positions, `r` at `0..|r|` and the shared context (`t2 X t3`)
//! to its right. Left resets reuse the same search on the mirrored layout,
//! with moves reversed; the machine itself is untouched.
//!
//! Contexts are never enumerated up front. Two runs are simulated side by
//! side and a cell's initial content is chosen only when a head first lands
//! on it, so every branch corresponds to a family of concrete contexts that
//! agree on what was read.

use std::collections::HashSet;

use super::{
    Bounds, Move, ResetOracle, ResetReason, ResetSide, ResetVerdict, ResetWitness, TuringMachine,
};
use crate::words::{Letter, Word};

const UNK: Letter = Letter::MAX;

/// Node expansions allowed per query before giving up with `exhausted`.
const NODE_BUDGET: usize = 400_000;

/// Bounded right-reset check. An illegal `r` is a reset outright; otherwise
/// `Reset` is only returned when `oracle` vouches for `r`. Without an oracle
/// the answer is a witness or `Unknown`.
pub fn is_right_reset_bounded(
    tm: &TuringMachine,
    r: &Word,
    bounds: Bounds,
    oracle: Option<&dyn ResetOracle>,
) -> ResetVerdict {
    bounded(tm, r, bounds, ResetSide::Right, oracle)
}

/// Left dual of [`is_right_reset_bounded`].
pub fn is_left_reset_bounded(
    tm: &TuringMachine,
    r: &Word,
    bounds: Bounds,
    oracle: Option<&dyn ResetOracle>,
) -> ResetVerdict {
    bounded(tm, r, bounds, ResetSide::Left, oracle)
}

fn bounded(
    tm: &TuringMachine,
    r: &Word,
    bounds: Bounds,
    side: ResetSide,
    oracle: Option<&dyn ResetOracle>,
) -> ResetVerdict {
    if !tm.is_legal(r) {
        return ResetVerdict::Reset(ResetReason::Illegal);
    }
    if let Some(o) = oracle {
        let says = match side {
            ResetSide::Right => o.is_right_reset(r),
            ResetSide::Left => o.is_left_reset(r),
        };
        if says == Some(true) {
            return ResetVerdict::Reset(ResetReason::Oracle(o.name().to_string()));
        }
    }
    if no_flow_certificate(tm, r, side) {
        return ResetVerdict::Unknown {
            bounds,
            no_flow: true,
            exhausted: false,
        };
    }
    let mut engine = Engine::new(tm, r, bounds, side);
    match engine.run() {
        Ok(Some(w)) => ResetVerdict::NonReset(w),
        Ok(None) => ResetVerdict::Unknown {
            bounds,
            no_flow: false,
            exhausted: false,
        },
        Err(()) => ResetVerdict::Unknown {
            bounds,
            no_flow: false,
            exhausted: true,
        },
    }
}

fn abstract_dir(side: ResetSide, d: Move) -> i64 {
    match (side, d) {
        (ResetSide::Right, Move::R) | (ResetSide::Left, Move::L) => 1,
        _ => -1,
    }
}

fn abstract_word(side: ResetSide, r: &Word) -> Vec<Letter> {
    match side {
        ResetSide::Right => r.0.clone(),
        ResetSide::Left => r.0.iter().rev().copied().collect(),
    }
}

/// True when no head can ever carry information from the varying context
/// across `r` to the tracked side.
///
/// The head is followed abstractly while it is inside `r`; outside it may do
/// anything and come back in any state that some move can enter. Information
/// can only flow if the head visits the varying side and afterwards reaches
/// the tracked side, so unreachability of that situation certifies a reset.
pub fn no_flow_certificate(tm: &TuringMachine, r: &Word, side: ResetSide) -> bool {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum Loc {
        Varying,
        In(usize, usize),
        Tracked,
    }
    let ra = abstract_word(side, r);
    let n = ra.len();
    let content: Vec<Letter> = ra.iter().map(|&s| tm.letter_of(s)).collect();
    let targets = |sign: i64| -> Vec<usize> {
        let mut v: Vec<usize> = [Move::L, Move::R]
            .into_iter()
            .filter(|&d| abstract_dir(side, d) == sign)
            .flat_map(|d| tm.move_targets(d))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let (inward, outward) = (targets(1), targets(-1));
    let mut stack = Vec::new();
    match ra.iter().position(|&s| tm.state_of(s).is_some()) {
        Some(i) => stack.push((
            content,
            Loc::In(i, tm.state_of(ra[i]).expect("head")),
            false,
        )),
        None => {
            stack.push((content.clone(), Loc::Varying, true));
            stack.push((content, Loc::Tracked, false));
        }
    }
    let mut seen = HashSet::new();
    while let Some(node) = stack.pop() {
        if !seen.insert(node.clone()) {
            continue;
        }
        let (c, loc, visited) = node;
        match loc {
            Loc::Tracked if visited => return false,
            Loc::Varying => {
                for &p in &inward {
                    let next = if n == 0 { Loc::Tracked } else { Loc::In(0, p) };
                    stack.push((c.clone(), next, true));
                }
            }
            Loc::Tracked => {
                for &p in &outward {
                    let next = if n == 0 {
                        Loc::Varying
                    } else {
                        Loc::In(n - 1, p)
                    };
                    let v = visited || n == 0;
                    stack.push((c.clone(), next, v));
                }
            }
            Loc::In(i, q) => {
                if let Some(t) = tm.delta(q, c[i]) {
                    let mut c2 = c.clone();
                    c2[i] = t.write;
                    let j = i as i64 + abstract_dir(side, t.dir);
                    if j < 0 {
                        stack.push((c2, Loc::Varying, true));
                    } else if j as usize >= n {
                        stack.push((c2, Loc::Tracked, visited));
                    } else {
                        stack.push((c2, Loc::In(j as usize, t.next), visited));
                    }
                }
            }
        }
    }
    true
}

#[derive(Clone)]
struct Run {
    cells: Vec<Letter>,
    head: Option<(i64, usize)>,
    halted: bool,
}

#[derive(Clone)]
struct Node {
    runs: [Run; 2],
    var: [Vec<Letter>; 2],
    shared: Vec<Letter>,
    init_head: [Option<(i64, usize)>; 2],
    step: usize,
}

struct Engine<'a> {
    tm: &'a TuringMachine,
    r: Word,
    side: ResetSide,
    ra: Vec<Letter>,
    rl: i64,
    ctx: i64,
    n_max: usize,
    lo: i64,
    width: usize,
    filler: Letter,
    expanded: usize,
}

impl<'a> Engine<'a> {
    fn new(tm: &'a TuringMachine, r: &Word, bounds: Bounds, side: ResetSide) -> Self {
        let ra = abstract_word(side, r);
        let rl = ra.len() as i64;
        let ctx = bounds.ctx_len as i64;
        let lo = -ctx - bounds.n_max as i64 - 2;
        let hi = rl + 2 * ctx + 1 + bounds.n_max as i64 + 2;
        let filler = tm
            .tape_alphabet()
            .letters()
            .find(|&l| l != tm.blank())
            .unwrap_or(tm.blank());
        Engine {
            tm,
            r: r.clone(),
            side,
            ra,
            rl,
            ctx,
            n_max: bounds.n_max,
            lo,
            width: (hi - lo) as usize,
            filler,
            expanded: 0,
        }
    }

    fn shared_len(&self) -> i64 {
        2 * self.ctx + 1
    }

    fn blank_run(&self) -> Run {
        let mut cells = vec![self.tm.blank(); self.width];
        for x in -self.ctx..self.rl + self.shared_len() {
            let i = (x - self.lo) as usize;
            cells[i] = if (0..self.rl).contains(&x) {
                self.tm.letter_of(self.ra[x as usize])
            } else {
                UNK
            };
        }
        Run {
            cells,
            head: None,
            halted: false,
        }
    }

    fn cell(&self, run: &Run, x: i64) -> Letter {
        run.cells[(x - self.lo) as usize]
    }

    fn set(&self, run: &mut Run, x: i64, l: Letter) {
        run.cells[(x - self.lo) as usize] = l;
    }

    fn sym_at(&self, run: &Run, x: i64) -> Letter {
        let c = self.cell(run, x);
        match run.head {
            Some((h, q)) if h == x && c != UNK => self.tm.sym(c, Some(q)),
            _ => c,
        }
    }

    fn starts(&self) -> Vec<Node> {
        let base = Node {
            runs: [self.blank_run(), self.blank_run()],
            var: [vec![UNK; self.ctx as usize], vec![UNK; self.ctx as usize]],
            shared: vec![UNK; self.shared_len() as usize],
            init_head: [None, None],
            step: 0,
        };
        let mut out = Vec::new();
        if let Some(i) = self.ra.iter().position(|&s| self.tm.state_of(s).is_some()) {
            let q = self.tm.state_of(self.ra[i]).expect("head");
            let mut n = base;
            for k in 0..2 {
                n.runs[k].head = Some((i as i64, q));
                n.init_head[k] = Some((i as i64, q));
            }
            out.push(n);
            return out;
        }
        let states = self.tm.states().len();
        let letters: Vec<Letter> = self.tm.tape_alphabet().letters().collect();
        // head in the varying context of the first run only
        for j in 1..=self.ctx {
            for q in 0..states {
                for &c in &letters {
                    let mut n = base.clone();
                    n.var[0][(j - 1) as usize] = c;
                    self.set(&mut n.runs[0], -j, c);
                    n.runs[0].head = Some((-j, q));
                    n.init_head[0] = Some((-j, q));
                    if self.partial_legal(&n, 0) {
                        out.push(n);
                    }
                }
            }
        }
        // head in the shared context
        for h in 0..self.shared_len() {
            for q in 0..states {
                for &c in &letters {
                    let mut n = base.clone();
                    let x = self.rl + h;
                    n.shared[h as usize] = c;
                    for k in 0..2 {
                        self.set(&mut n.runs[k], x, c);
                        n.runs[k].head = Some((x, q));
                        n.init_head[k] = Some((x, q));
                    }
                    if self.partial_legal(&n, 0) && self.partial_legal(&n, 1) {
                        out.push(n);
                    }
                }
            }
        }
        out
    }

    /// Initial word of run `k` over the whole context window, `None` for
    /// cells not chosen yet.
    fn initial_cells(&self, node: &Node, k: usize) -> Vec<Option<Letter>> {
        let known = |l: Letter| (l != UNK).then_some(l);
        let mut v: Vec<Option<Letter>> = (0..self.ctx as usize)
            .rev()
            .map(|j| known(node.var[k][j]))
            .collect();
        v.extend(self.ra.iter().map(|&s| Some(self.tm.letter_of(s))));
        v.extend(node.shared.iter().map(|&l| known(l)));
        if let Some((x, q)) = node.init_head[k] {
            let i = (x + self.ctx) as usize;
            v[i] = v[i].map(|l| self.tm.sym(l, Some(q)));
        }
        v
    }

    /// Whether some filling of the unknown cells is legal.
    fn fillable(&self, cells: &[Option<Letter>]) -> Option<Vec<Letter>> {
        let mut runs = Vec::new();
        let mut i = 0;
        while i < cells.len() {
            if cells[i].is_none() {
                let s = i;
                while i < cells.len() && cells[i].is_none() {
                    i += 1;
                }
                runs.push((s, i));
            } else {
                i += 1;
            }
        }
        if runs.len() > 6 {
            return Some(cells.iter().map(|c| c.unwrap_or(self.tm.blank())).collect());
        }
        // a legal completion exists iff one filling each gap uniformly exists
        for mask in 0..(1u32 << runs.len()) {
            let mut w: Vec<Letter> = cells.iter().map(|c| c.unwrap_or(0)).collect();
            for (b, &(s, e)) in runs.iter().enumerate() {
                let fill = if mask >> b & 1 == 1 {
                    self.filler
                } else {
                    self.tm.blank()
                };
                w[s..e].iter_mut().for_each(|c| *c = fill);
            }
            if self.tm.is_legal_slice(&w) {
                return Some(w);
            }
        }
        None
    }

    fn partial_legal(&self, node: &Node, k: usize) -> bool {
        self.fillable(&self.initial_cells(node, k)).is_some()
    }

    fn step_run(&self, run: &mut Run) -> bool {
        if run.halted {
            return false;
        }
        let Some((x, q)) = run.head else {
            run.halted = true;
            return false;
        };
        let Some(t) = self.tm.delta(q, self.cell(run, x)) else {
            run.halted = true;
            return false;
        };
        self.set(run, x, t.write);
        run.head = Some((x + abstract_dir(self.side, t.dir), t.next));
        true
    }

    fn run(&mut self) -> Result<Option<ResetWitness>, ()> {
        let mut stack: Vec<Node> = self.starts();
        stack.reverse();
        while let Some(node) = stack.pop() {
            self.expanded += 1;
            if self.expanded > NODE_BUDGET {
                return Err(());
            }
            if let Some(w) = self.advance(node, &mut stack) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn advance(&self, mut node: Node, stack: &mut Vec<Node>) -> Option<ResetWitness> {
        loop {
            for k in 0..2 {
                let run = &node.runs[k];
                if run.halted {
                    continue;
                }
                if let Some((x, _)) = run.head {
                    if self.cell(run, x) == UNK {
                        self.branch(&node, k, x, stack);
                        return None;
                    }
                }
            }
            if node.step == self.n_max {
                return None;
            }
            let a = self.step_run(&mut node.runs[0]);
            let b = self.step_run(&mut node.runs[1]);
            if !a && !b {
                return None;
            }
            node.step += 1;
            if let Some(w) = self.check_witness(&node) {
                return Some(w);
            }
        }
    }

    fn branch(&self, node: &Node, k: usize, x: i64, stack: &mut Vec<Node>) {
        let letters: Vec<Letter> = self.tm.tape_alphabet().letters().collect();
        for &c in letters.iter().rev() {
            let mut child = node.clone();
            if x < 0 {
                child.var[k][(-x - 1) as usize] = c;
                self.set(&mut child.runs[k], x, c);
            } else {
                child.shared[(x - self.rl) as usize] = c;
                for j in 0..2 {
                    if self.cell(&child.runs[j], x) == UNK {
                        self.set(&mut child.runs[j], x, c);
                    }
                }
            }
            if self.partial_legal(&child, 0) && self.partial_legal(&child, 1) {
                stack.push(child);
            }
        }
    }

    fn check_witness(&self, node: &Node) -> Option<ResetWitness> {
        for p in 0..=self.ctx {
            let x = self.rl + p;
            if self.sym_at(&node.runs[0], x) != self.sym_at(&node.runs[1], x) {
                if let Some(w) = self.build_witness(node, p as usize) {
                    return Some(w);
                }
            }
        }
        None
    }

    /// Completes the partially chosen contexts into concrete words with the
    /// tracked cell at shared index `p`.
    fn build_witness(&self, node: &Node, p: usize) -> Option<ResetWitness> {
        let ctx = self.ctx as usize;
        let limit = p + ctx + 1;
        let mut cells0 = self.initial_cells(node, 0);
        let mut cells1 = self.initial_cells(node, 1);
        let shared_start = ctx + self.ra.len();
        for i in shared_start + limit..cells0.len() {
            for cells in [&mut cells0, &mut cells1] {
                match cells[i] {
                    None => cells[i] = Some(self.tm.blank()),
                    Some(s) if s == self.tm.blank() => {}
                    Some(_) => return None,
                }
            }
        }
        // the shared part must be filled identically in both words
        let w0 = self.fillable(&cells0)?;
        let mut cells1b = cells1;
        cells1b[ctx..].copy_from_slice(&w0[ctx..].iter().map(|&s| Some(s)).collect::<Vec<_>>());
        let w1 = self.fillable(&cells1b)?;
        let trim_var = |w: &[Letter]| -> Vec<Letter> {
            // abstract order, far end first
            let v = &w[..ctx];
            let start = v.iter().position(|&s| s != self.tm.blank()).unwrap_or(ctx);
            v[start..].to_vec()
        };
        let shared = &w0[shared_start..];
        let end = shared
            .iter()
            .rposition(|&s| s != self.tm.blank())
            .map_or(0, |i| i + 1)
            .max(p + 1);
        let between = shared[..p].to_vec();
        let tracked = shared[p];
        let outer = shared[p + 1..end].to_vec();
        let (v0, v1) = (trim_var(&w0), trim_var(&w1));
        let witness = match self.side {
            ResetSide::Right => ResetWitness {
                side: self.side,
                context: Word(v0),
                context_alt: Word(v1),
                between: Word(between),
                tracked,
                outer: Word(outer),
                steps: node.step,
            },
            ResetSide::Left => {
                let rev = |v: Vec<Letter>| Word(v.into_iter().rev().collect());
                ResetWitness {
                    side: self.side,
                    context: rev(v0),
                    context_alt: rev(v1),
                    between: rev(between),
                    tracked,
                    outer: rev(outer),
                    steps: node.step,
                }
            }
        };
        witness.replay(self.tm, &self.r).map(|_| witness)
    }
}
