use std::fs;
use std::path::Path;

use num_bigint::BigUint;
use revmult::{
    brute_force_enumerate_with_budget, classify, count_structural, generate_up_to,
    is_reverse_multiple, palindrome_count, recognize, BlockForm, CarryPairAutomaton, DigitSequence,
    EnumerationRecord, Error,
};

use crate::output::{Output, Params, Record};
use crate::Method;

pub type CommandResult = Result<Status, Box<dyn std::error::Error>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    /// Well-formed query, negative answer.
    Negative = 1,
    Failure = 2,
}

/// The decimal `k = 4` and `k = 9` cases have a block form.
fn has_block_form(base: u32, k: u32) -> bool {
    base == 10 && (k == 4 || k == 9)
}

fn block_form_of(d: &DigitSequence, k: u32) -> Option<BlockForm> {
    if !has_block_form(d.base(), k) {
        return None;
    }
    recognize(d, k).ok()?.form().cloned()
}

fn describe(r: &EnumerationRecord, form: Option<&BlockForm>) -> String {
    let mut line = format!("{}\tbase={} k={} length={}", r.value, r.base, r.k, r.length);
    if let Some(form) = form {
        line.push_str(&format!("\t{form}"));
    }
    line
}

pub fn verify(out: &mut Output, number: &str, k: Option<u32>, base: u32) -> CommandResult {
    let d = DigitSequence::parse(number, base)?;
    let Some(k) = k else {
        let ks = classify(&d);
        if ks.is_empty() {
            out.emit(
                &format!("{d} is not a reverse multiple for any k in [1, {base})"),
                &Record {
                    value: Some(d.to_string()),
                    base,
                    length: Some(d.len()),
                    holds: Some(false),
                    ..Default::default()
                },
            )?;
            return Ok(Status::Negative);
        }
        for k in ks {
            let form = block_form_of(&d, k);
            out.emit(
                &format!("{d} is a ({base},{k})-reverse multiple"),
                &Record {
                    value: Some(d.to_string()),
                    base,
                    k: Some(k),
                    length: Some(d.len()),
                    params: form.as_ref().map(Params::from),
                    holds: Some(true),
                    ..Default::default()
                },
            )?;
        }
        return Ok(Status::Success);
    };

    let holds = is_reverse_multiple(&d, k)?;
    let product = d.scalar_multiply(k)?;
    let form = if holds { block_form_of(&d, k) } else { None };
    let human = if holds {
        format!("{d} is a ({base},{k})-reverse multiple: {k} x {d} = {product}")
    } else {
        let reversed: String = d.to_string().chars().rev().collect();
        format!(
            "{d} is not a ({base},{k})-reverse multiple: {k} x {d} = {product}, reversal is {reversed}"
        )
    };
    out.emit(
        &human,
        &Record {
            value: Some(d.to_string()),
            base,
            k: Some(k),
            length: Some(d.len()),
            params: form.as_ref().map(Params::from),
            holds: Some(holds),
            ..Default::default()
        },
    )?;
    Ok(if holds {
        Status::Success
    } else {
        Status::Negative
    })
}

pub fn enumerate(
    out: &mut Output,
    base: u32,
    k: u32,
    length: usize,
    method: Method,
    budget: u128,
) -> CommandResult {
    if length == 0 {
        return Err(Error::ZeroLength.into());
    }
    let records = match method {
        Method::Oracle => match brute_force_enumerate_with_budget(base, k, length, budget) {
            Err(e @ Error::BudgetExceeded { .. }) => {
                return Err(format!("{e} (--method graph)").into());
            }
            other => other?,
        },
        Method::Graph => CarryPairAutomaton::build(base, k)?.enumerate_length(length),
        Method::Structural => {
            if base != 10 {
                return Err("the structural method needs --base 10".into());
            }
            let mut all = generate_up_to(k, length)?;
            all.retain(|r| r.length == length);
            all
        }
    };
    for r in &records {
        let form = block_form_of(&r.value, k);
        out.emit(
            &describe(r, form.as_ref()),
            &Record::from_enumeration(r, form.as_ref()),
        )?;
    }
    Ok(if records.is_empty() {
        Status::Negative
    } else {
        Status::Success
    })
}

pub fn count(out: &mut Output, base: u32, k: u32, max_length: usize) -> CommandResult {
    let automaton = CarryPairAutomaton::build(base, k)?;
    let counts = automaton.count_by_length(max_length);
    for (&length, n) in &counts {
        let cross: Option<BigUint> = match (base, k) {
            (10, 1) => Some(palindrome_count(length)),
            _ if has_block_form(base, k) => Some(count_structural(k, length)?),
            _ => None,
        };
        if let Some(expected) = cross {
            if &expected != n {
                return Err(format!(
                    "internal inconsistency at length {length}: automaton counts {n}, closed form gives {expected}"
                )
                .into());
            }
        }
        out.emit(
            &format!("length {length}: {n}"),
            &Record {
                base,
                k: Some(k),
                length: Some(length),
                count: Some(n.to_string()),
                ..Default::default()
            },
        )?;
    }
    Ok(Status::Success)
}

/// The reference table: number, multiplier, nine-runs, zero-runs.
const TABLE: [(&str, u32, &[usize], &[usize]); 3] = [
    ("21782178", 4, &[0, 0], &[0]),
    ("21782197800219782178", 4, &[0, 1, 1, 0], &[0, 2, 0]),
    ("10890109998901089", 9, &[0, 3, 0], &[1, 1]),
];

pub fn table(out: &mut Output) -> CommandResult {
    for (text, k, ls, ms) in TABLE {
        let d = DigitSequence::parse(text, 10)?;
        if !is_reverse_multiple(&d, k)? {
            return Err(format!("table row {text} is not a (10,{k})-reverse multiple").into());
        }
        let form = match recognize(&d, k)? {
            revmult::RecognitionResult::Matched(form) => form,
            revmult::RecognitionResult::Rejected(why) => {
                return Err(format!("table row {text} does not parse: {why}").into());
            }
        };
        if form.block_params() != ls || form.separator_params() != ms {
            return Err(format!(
                "table row {text} parses to l={:?} m={:?}, expected l={ls:?} m={ms:?}",
                form.block_params(),
                form.separator_params()
            )
            .into());
        }
        out.emit(
            &format!("{text}, {form}, (10,{k})"),
            &Record {
                value: Some(text.to_string()),
                base: 10,
                k: Some(k),
                length: Some(d.len()),
                params: Some(Params::from(&form)),
                ..Default::default()
            },
        )?;
    }
    Ok(Status::Success)
}

pub fn graph(out: &mut Output, base: u32, k: u32, dot: Option<&Path>) -> CommandResult {
    let automaton = CarryPairAutomaton::build(base, k)?;
    if let Some(path) = dot {
        fs::write(path, automaton.export_dot())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    let states = automaton.states().count();
    let reachable = automaton.reachable_states().len();
    let initial = automaton.initial_states().len();
    let feasible = automaton.is_feasible();
    let mut human = format!(
        "base: {base}\nk: {k}\nstates: {states}\nreachable states: {reachable}\ninitial states: {initial}\nfeasible: {feasible}"
    );
    if let Some(path) = dot {
        human.push_str(&format!("\ndot: {}", path.display()));
    }
    out.emit(
        &human,
        &Record {
            base,
            k: Some(k),
            states: Some(states),
            reachable_states: Some(reachable),
            initial_states: Some(initial),
            feasible: Some(feasible),
            dot: dot.map(|p| p.display().to_string()),
            ..Default::default()
        },
    )?;
    Ok(Status::Success)
}
