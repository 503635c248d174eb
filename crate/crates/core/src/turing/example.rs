//! The machine accepting `{aⁿbⁿ : n ≥ 1}` and the closed form of its
//! non-resets.

use super::{Move, ResetOracle, Rule, TuringMachine};
use crate::words::{Letter, Word};

const A: Letter = 0;
const B: Letter = 1;
const Y: Letter = 3;
const GAMMA: usize = 6;

/// Seven states `q0…q6`, tape `a b X Y Z _`, `q0` initial and `q6` final.
pub fn example_machine() -> TuringMachine {
    use Move::{L, R};
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let rules = [
        Rule::new("q0", "a", "q1", "X", R),
        Rule::new("q0", "Y", "q5", "Y", R),
        Rule::new("q1", "a", "q1", "a", R),
        Rule::new("q1", "Y", "q2", "Y", R),
        Rule::new("q1", "b", "q3", "Y", L),
        Rule::new("q2", "Y", "q2", "Y", R),
        Rule::new("q2", "b", "q3", "Y", L),
        Rule::new("q3", "Y", "q3", "Y", L),
        Rule::new("q3", "a", "q4", "a", L),
        Rule::new("q3", "X", "q0", "X", R),
        Rule::new("q4", "a", "q4", "a", L),
        Rule::new("q4", "X", "q0", "X", R),
        Rule::new("q5", "Y", "q5", "Y", R),
        Rule::new("q5", "_", "q6", "Z", L),
    ];
    TuringMachine::new(
        &s(&["q0", "q1", "q2", "q3", "q4", "q5", "q6"]),
        &s(&["a", "b"]),
        &s(&["a", "b", "X", "Y", "Z", "_"]),
        "q0",
        &s(&["q6"]),
        &rules,
    )
    .expect("example machine is well formed")
}

/// Membership in the complement of `RRes(T)` for [`example_machine`]:
///
/// `a*{b,Y}* ∪ ⋃_{i=1,3,4} a*a^{qi}a*{b,Y}* ∪ ⋃_{i=1,2} a*Y*b^{qi}{b,Y}*
///  ∪ ⋃_{i=1,2,3} a*Y*Y^{qi}{b,Y}*`.
pub fn example_nonreset_oracle(w: &Word) -> bool {
    let mut head: Option<(usize, Letter, usize)> = None;
    let mut seen_tail = false;
    for (i, &s) in w.0.iter().enumerate() {
        let x = (s as usize % GAMMA) as Letter;
        match x {
            A if seen_tail => return false,
            A => {}
            B | Y => seen_tail = true,
            _ => return false,
        }
        if s as usize >= GAMMA {
            if head.is_some() {
                return false;
            }
            head = Some((i, x, s as usize / GAMMA - 1));
        }
    }
    let Some((h, x, q)) = head else { return true };
    let before_has_b = w.0[..h].iter().any(|&s| s as usize % GAMMA == B as usize);
    match x {
        A => matches!(q, 1 | 3 | 4),
        B => matches!(q, 1 | 2) && !before_has_b,
        _ => matches!(q, 1..=3) && !before_has_b,
    }
}

/// Closed-form reset oracle of [`example_machine`]; left and right resets
/// coincide for this machine.
#[derive(Clone, Copy, Debug, Default)]
pub struct AnbnOracle;

impl ResetOracle for AnbnOracle {
    fn name(&self) -> &str {
        "builtin-anbn"
    }

    fn is_right_reset(&self, w: &Word) -> Option<bool> {
        Some(!example_nonreset_oracle(w))
    }

    fn is_left_reset(&self, w: &Word) -> Option<bool> {
        Some(!example_nonreset_oracle(w))
    }
}
