//! Parameter grids and the worker pool that evaluates them.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Largest number of values a single list may expand to.
pub const MAX_VALUES: usize = 10_000;

/// Parses `3`, `1,2,5`, `1..4` or a mix such as `1..3,6` into a sorted,
/// deduplicated list. Ranges are inclusive.
pub fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let (a, b) = (parse_one(a)?, parse_one(b)?);
                if a > b {
                    return Err(format!("empty range {part:?}"));
                }
                if b - a >= MAX_VALUES - out.len().min(MAX_VALUES) {
                    return Err(format!("{s:?} expands to more than {MAX_VALUES} values"));
                }
                out.extend(a..=b);
            }
            None => out.push(parse_one(part)?),
        }
        if out.len() > MAX_VALUES {
            return Err(format!("{s:?} expands to more than {MAX_VALUES} values"));
        }
    }
    if out.is_empty() {
        return Err(format!("no values in {s:?}"));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn parse_one(s: &str) -> Result<usize, String> {
    s.trim().parse().map_err(|_| format!("{s:?} is not a nonnegative integer"))
}

/// Number of worker threads: the explicit setting, else the machine's
/// parallelism.
pub fn worker_count(requested: Option<usize>) -> usize {
    requested
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Evaluates `f` on every cell with a bounded pool and returns the results
/// in cell order, independent of scheduling.
pub fn run_cells<C, R, F>(cells: &[C], workers: usize, f: F) -> Vec<R>
where
    C: Sync,
    R: Send,
    F: Fn(&C) -> R + Sync,
{
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..cells.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers.clamp(1, cells.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(cell) = cells.get(i) else { break };
                let r = f(cell);
                slots.lock().expect("no worker panicked")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("no worker panicked").into_iter().map(|r| r.expect("every cell ran")).collect()
}

/// Cartesian product of parameter lists, in lexicographic order.
pub fn product(lists: &[Vec<usize>]) -> Vec<Vec<usize>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect()
    })
}
