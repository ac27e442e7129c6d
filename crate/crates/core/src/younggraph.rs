//! Carry-pair automaton ("Young graph") for `(g, k)`-reverse multiples.
//!
//! Write `M = a_n ... a_0` and let `c_j` be the carry into position `j` when
//! computing `k * M`. `M` reverses under `k` exactly when
//!
//! ```text
//! k * a_j + c_j = a_{n-j} + g * c_{j+1}    for j = 0..=n,  c_0 = c_{n+1} = 0.
//! ```
//!
//! The automaton reads digit pairs `(a_p, a_{n-p})` from the outside in. Its
//! state after step `p` is `(c_{p+1}, c_{n-p})`: the carry produced on the low
//! side, and a guess for the carry that the still-unread middle must deliver
//! into the high side. The guess is checked when the two sides meet, so a
//! state is accepting independently of the length that reached it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::digits::{check_base, check_multiplier, DigitSequence};
use crate::error::Result;
use crate::verifier::{EnumerationRecord, Source};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CarryPairState {
    /// Low-side carry `c_{p+1}`.
    pub forward: u32,
    /// Guessed high-side carry `c_{n-p}`.
    pub backward: u32,
}

impl CarryPairState {
    pub const ORIGIN: CarryPairState = CarryPairState {
        forward: 0,
        backward: 0,
    };
}

/// One step of the automaton: digits `a_p` (low) and `a_{n-p}` (high), and
/// the state they lead to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Move {
    pub low: u8,
    pub high: u8,
    pub to: CarryPairState,
}

#[derive(Debug, Clone)]
pub struct CarryPairAutomaton {
    base: u32,
    k: u32,
    /// Moves for the outermost pair, from `c_0 = c_{n+1} = 0` with non-zero digits.
    initial: Vec<Move>,
    /// Inner moves, indexed by `state_index`.
    moves: Vec<Vec<Move>>,
    /// Center digits closing an odd length, indexed by `state_index`.
    centers: Vec<Vec<u8>>,
}

/// All moves out of `from` whose digits satisfy both the low-position and
/// high-position carry equations. Sorted by `(low, high)`.
fn step(base: u32, k: u32, from: CarryPairState, outermost: bool) -> Vec<Move> {
    let first = u8::from(outermost);
    let g = base as u8;
    let mut out = Vec::new();
    for low in first..g {
        for high in first..g {
            let (lo, hi) = (i64::from(low), i64::from(high));
            let (radix, mult) = (i64::from(base), i64::from(k));
            // k * a_p + c_p = a_{n-p} + g * c_{p+1}
            let excess = mult * lo + i64::from(from.forward) - hi;
            if excess < 0 || excess % radix != 0 {
                continue;
            }
            let forward = excess / radix;
            // k * a_{n-p} + c_{n-p} = a_p + g * c_{n-p+1}
            let backward = lo + radix * i64::from(from.backward) - mult * hi;
            if !(0..mult).contains(&backward) {
                continue;
            }
            debug_assert!((0..mult).contains(&forward));
            out.push(Move {
                low,
                high,
                to: CarryPairState {
                    forward: forward as u32,
                    backward: backward as u32,
                },
            });
        }
    }
    out
}

impl CarryPairAutomaton {
    pub fn build(base: u32, k: u32) -> Result<Self> {
        check_base(base)?;
        check_multiplier(base, k)?;
        let mut automaton = Self {
            base,
            k,
            initial: step(base, k, CarryPairState::ORIGIN, true),
            moves: Vec::new(),
            centers: Vec::new(),
        };
        for state in automaton.states() {
            automaton.moves.push(step(base, k, state, false));
            // k * a_m + c_m = a_m + g * c_{m+1}
            let centers = (0..base)
                .filter(|&a| k * a + state.forward == a + base * state.backward)
                .map(|a| a as u8)
                .collect();
            automaton.centers.push(centers);
        }
        Ok(automaton)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Every carry pair in `[0, k)²`, in ascending order.
    pub fn states(&self) -> impl Iterator<Item = CarryPairState> {
        let k = self.k;
        (0..k).flat_map(move |forward| {
            (0..k).map(move |backward| CarryPairState { forward, backward })
        })
    }

    fn state_index(&self, s: CarryPairState) -> usize {
        (s.forward * self.k + s.backward) as usize
    }

    pub fn initial_moves(&self) -> &[Move] {
        &self.initial
    }

    pub fn moves_from(&self, s: CarryPairState) -> &[Move] {
        &self.moves[self.state_index(s)]
    }

    /// Center digits that close an odd-length number at `s`.
    pub fn center_digits(&self, s: CarryPairState) -> &[u8] {
        &self.centers[self.state_index(s)]
    }

    /// Whether an even-length number can close at `s`: the low-side carry
    /// must be the carry that was guessed for the high side.
    pub fn closes_even(&self, s: CarryPairState) -> bool {
        s.forward == s.backward
    }

    pub fn closes_odd(&self, s: CarryPairState) -> bool {
        !self.center_digits(s).is_empty()
    }

    /// Single-digit reverse multiples: `k * a = a` with no carries.
    fn single_digits(&self) -> Vec<u8> {
        self.center_digits(CarryPairState::ORIGIN)
            .iter()
            .copied()
            .filter(|&d| d != 0)
            .collect()
    }

    /// States reachable from the initial moves, ascending.
    pub fn reachable_states(&self) -> Vec<CarryPairState> {
        let mut seen = vec![false; (self.k * self.k) as usize];
        let mut stack: Vec<CarryPairState> = self.initial.iter().map(|m| m.to).collect();
        while let Some(s) = stack.pop() {
            let i = self.state_index(s);
            if seen[i] {
                continue;
            }
            seen[i] = true;
            stack.extend(self.moves_from(s).iter().map(|m| m.to));
        }
        self.states()
            .filter(|&s| seen[self.state_index(s)])
            .collect()
    }

    pub fn initial_states(&self) -> Vec<CarryPairState> {
        let mut states: Vec<_> = self.initial.iter().map(|m| m.to).collect();
        states.sort();
        states.dedup();
        states
    }

    /// Whether any length admits a reverse multiple.
    pub fn is_feasible(&self) -> bool {
        !self.single_digits().is_empty()
            || self
                .reachable_states()
                .into_iter()
                .any(|s| self.closes_even(s) || self.closes_odd(s))
    }

    /// `live[r][i]`: from state `i`, `r` more pair steps can reach a closing
    /// state of the requested parity.
    fn liveness(&self, steps: usize, odd: bool) -> Vec<Vec<bool>> {
        let closing: Vec<bool> = self
            .states()
            .map(|s| {
                if odd {
                    self.closes_odd(s)
                } else {
                    self.closes_even(s)
                }
            })
            .collect();
        let mut live = vec![closing];
        for r in 1..=steps {
            let next = self
                .states()
                .map(|s| {
                    self.moves_from(s)
                        .iter()
                        .any(|m| live[r - 1][self.state_index(m.to)])
                })
                .collect();
            live.push(next);
        }
        live
    }

    /// All reverse multiples with exactly `length` digits, ascending.
    pub fn enumerate_length(&self, length: usize) -> Vec<EnumerationRecord> {
        let mut found: Vec<Vec<u8>> = Vec::new();
        match length {
            0 => {}
            1 => found.extend(self.single_digits().into_iter().map(|d| vec![d])),
            _ => {
                let pairs = length / 2;
                let odd = length % 2 == 1;
                let live = self.liveness(pairs - 1, odd);
                let mut buf = vec![0u8; length];
                for m in &self.initial {
                    if live[pairs - 1][self.state_index(m.to)] {
                        self.descend(*m, 0, pairs, odd, &live, &mut buf, &mut found);
                    }
                }
            }
        }
        found.sort();
        found
            .into_iter()
            .map(|digits| {
                let value =
                    DigitSequence::new(self.base, digits).expect("outer digits are non-zero");
                EnumerationRecord::new(value, self.k, Source::Automaton)
            })
            .collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        m: Move,
        p: usize,
        pairs: usize,
        odd: bool,
        live: &[Vec<bool>],
        buf: &mut Vec<u8>,
        found: &mut Vec<Vec<u8>>,
    ) {
        let len = buf.len();
        buf[p] = m.high;
        buf[len - 1 - p] = m.low;
        let remaining = pairs - 1 - p;
        if remaining == 0 {
            if odd {
                for &c in self.center_digits(m.to) {
                    buf[pairs] = c;
                    found.push(buf.clone());
                }
            } else if self.closes_even(m.to) {
                found.push(buf.clone());
            }
            return;
        }
        for &next in self.moves_from(m.to) {
            if live[remaining - 1][self.state_index(next.to)] {
                self.descend(next, p + 1, pairs, odd, live, buf, found);
            }
        }
    }

    /// Number of reverse multiples of each length `1..=max_length`, by a
    /// transfer-matrix pass over the states. No digit strings are built.
    pub fn count_by_length(&self, max_length: usize) -> BTreeMap<usize, BigUint> {
        let mut counts = BTreeMap::new();
        if max_length == 0 {
            return counts;
        }
        counts.insert(1, BigUint::from(self.single_digits().len()));

        let n = (self.k * self.k) as usize;
        let mut paths = vec![BigUint::zero(); n];
        for m in &self.initial {
            paths[self.state_index(m.to)] += 1u32;
        }
        let mut pairs = 1;
        loop {
            let even_len = 2 * pairs;
            if even_len > max_length {
                break;
            }
            let mut even = BigUint::zero();
            let mut odd = BigUint::zero();
            for s in self.states() {
                let c = &paths[self.state_index(s)];
                if c.is_zero() {
                    continue;
                }
                if self.closes_even(s) {
                    even += c;
                }
                odd += c * self.center_digits(s).len();
            }
            counts.insert(even_len, even);
            if even_len < max_length {
                counts.insert(even_len + 1, odd);
            }

            let mut next = vec![BigUint::zero(); n];
            for s in self.states() {
                let c = &paths[self.state_index(s)];
                if c.is_zero() {
                    continue;
                }
                for m in self.moves_from(s) {
                    next[self.state_index(m.to)] += c;
                }
            }
            paths = next;
            pairs += 1;
        }
        counts
    }

    /// Graphviz rendering of the reachable part of the automaton.
    ///
    /// Initial states are filled, states closing an even length are double
    /// circles, states closing an odd length are drawn with a bold outline.
    /// Edges carry `(a_low, a_high)` digit pairs.
    pub fn export_dot(&self) -> String {
        let digit = |d: u8| char::from_digit(d.into(), self.base).expect("digit below base");
        let name = |s: CarryPairState| format!("s{}_{}", s.forward, s.backward);
        let reachable = self.reachable_states();
        let initial = self.initial_states();

        let mut out = String::new();
        let _ = writeln!(out, "digraph carry_pairs_g{}_k{} {{", self.base, self.k);
        let _ = writeln!(out, "  rankdir=LR;");
        let _ = writeln!(out, "  node [shape=circle];");
        for &s in &reachable {
            let mut attrs = vec![format!("label=\"({},{})\"", s.forward, s.backward)];
            if initial.binary_search(&s).is_ok() {
                let outer: Vec<String> = self
                    .initial
                    .iter()
                    .filter(|m| m.to == s)
                    .map(|m| format!("({},{})", digit(m.low), digit(m.high)))
                    .collect();
                attrs.push("style=filled".into());
                attrs.push("fillcolor=lightgrey".into());
                attrs.push(format!("xlabel=\"start {}\"", outer.join(" ")));
            }
            if self.closes_even(s) {
                attrs.push("shape=doublecircle".into());
            }
            if self.closes_odd(s) {
                attrs.push("penwidth=3".into());
            }
            let _ = writeln!(out, "  {} [{}];", name(s), attrs.join(", "));
        }
        for &s in &reachable {
            for m in self.moves_from(s) {
                let _ = writeln!(
                    out,
                    "  {} -> {} [label=\"({},{})\"];",
                    name(s),
                    name(m.to),
                    digit(m.low),
                    digit(m.high)
                );
            }
        }
        out.push_str("}\n");
        out
    }
}
