//! Text rendering of pivot configurations.
//!
//! Row `i` lists exponents `0..=max_exp` of index `i`, top row first:
//!
//! ```text
//!   r | 0 1 2
//! i=2 | # # #
//! i=1 | o @ O
//! ```
//!
//! `O` pivot of a column of `H`, `@` supernumerary pivot of `H`, `o` pivot of
//! an older column of `G`, `#` cell of an index holding no pivot at all,
//! `.` anything else.

use std::collections::HashSet;

use crate::polyvec::PivotIndex;
use crate::vxsat::defect_of_pivots;

pub fn pivot_diagram(g: &[PivotIndex], h: &[PivotIndex], n: usize, max_exp: usize) -> String {
    let older: HashSet<PivotIndex> = g.iter().copied().collect();
    let current: HashSet<PivotIndex> = h.iter().copied().collect();
    let supernumerary: HashSet<PivotIndex> = h
        .iter()
        .copied()
        .filter(|p| h.iter().any(|q| q.index == p.index && q.exponent > p.exponent))
        .collect();
    debug_assert_eq!(supernumerary.len(), defect_of_pivots(h));

    let width = n.to_string().len();
    let label = |i: usize| format!("i={i:>width$} |");
    let mut out = format!("{:>w$}", "r |", w = label(n).len());
    for r in 0..=max_exp {
        out.push_str(&format!(" {}", r % 10));
    }
    out.push('\n');

    for i in (1..=n).rev() {
        let empty = !older.iter().chain(&current).any(|p| p.index == i);
        out.push_str(&label(i));
        for r in 0..=max_exp {
            let at = PivotIndex::new(i, r);
            let glyph = if supernumerary.contains(&at) {
                '@'
            } else if current.contains(&at) {
                'O'
            } else if older.contains(&at) {
                'o'
            } else if empty {
                '#'
            } else {
                '.'
            };
            out.push(' ');
            out.push(glyph);
        }
        out.push('\n');
    }
    out
}
