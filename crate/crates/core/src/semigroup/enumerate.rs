//! Exhaustive enumeration of small multiplication tables.
//!
//! Tables are produced as raw tables, not up to isomorphism, by a
//! depth-first search that fills cells in row-major order and prunes as soon
//! as a fully defined triple violates associativity.

use super::{validate_table, RawTable, Semigroup};
use crate::error::{Error, Result};

pub const MAX_ENUM_SIZE: usize = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub commutative: bool,
    /// Every element idempotent.
    pub band: bool,
}

/// Depth-first iterator over all associative tables on `n` elements passing the filter.
pub struct TableEnumerator {
    n: usize,
    commutative: bool,
    cells: Vec<(usize, usize)>,
    table: Vec<Option<usize>>,
    next_val: Vec<usize>,
    depth: usize,
    done: bool,
}

pub fn enumerate(n: usize, filter: EnumFilter) -> Result<TableEnumerator> {
    if n == 0 || n > MAX_ENUM_SIZE {
        return Err(Error::SizeTooLarge(n));
    }
    let mut table = vec![None; n * n];
    let mut cells = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if filter.band && a == b {
                table[a * n + a] = Some(a);
            } else if !filter.commutative || a <= b {
                cells.push((a, b));
            }
        }
    }
    let len = cells.len();
    Ok(TableEnumerator { n, commutative: filter.commutative, cells, table, next_val: vec![0; len + 1], depth: 0, done: false })
}

/// Every commutative associative table on `n <= 4` elements.
pub fn enumerate_commutative(n: usize) -> Result<TableEnumerator> {
    enumerate(n, EnumFilter { commutative: true, band: false })
}

impl TableEnumerator {
    fn set(&mut self, (a, b): (usize, usize), v: Option<usize>) {
        self.table[a * self.n + b] = v;
        if self.commutative {
            self.table[b * self.n + a] = v;
        }
    }

    fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.table[a * self.n + b]
    }

    /// Checks every triple whose products are all defined.
    fn consistent(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.get(x, y) else { continue };
                for w in 0..n {
                    if let (Some(l), Some(yw)) = (self.get(xy, w), self.get(y, w)) {
                        if let Some(r) = self.get(x, yw) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn emit(&self) -> Semigroup {
        let n = self.n;
        let rows = (0..n).map(|a| (0..n).map(|b| self.get(a, b).expect("complete table")).collect()).collect();
        validate_table(RawTable::new(rows)).expect("enumerated tables are associative")
    }
}

impl Iterator for TableEnumerator {
    type Item = Semigroup;

    fn next(&mut self) -> Option<Semigroup> {
        loop {
            if self.done {
                return None;
            }
            if self.depth == self.cells.len() {
                let out = if self.consistent() { Some(self.emit()) } else { None };
                if self.depth == 0 {
                    self.done = true;
                } else {
                    self.depth -= 1;
                }
                if out.is_some() {
                    return out;
                }
                continue;
            }
            let cell = self.cells[self.depth];
            self.set(cell, None);
            let mut advanced = false;
            while self.next_val[self.depth] < self.n {
                let v = self.next_val[self.depth];
                self.next_val[self.depth] += 1;
                self.set(cell, Some(v));
                if self.consistent() {
                    self.depth += 1;
                    self.next_val[self.depth] = 0;
                    advanced = true;
                    break;
                }
                self.set(cell, None);
            }
            if !advanced {
                self.next_val[self.depth] = 0;
                if self.depth == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
            }
        }
    }
}
