use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::order::{BaseOrder, OrderSpec};
use crate::poly::MAX_VARS;

/// A named block of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub name: String,
    pub vars: Vec<String>,
}

/// Variable layout of a polynomial ring over the rationals.
///
/// Variables are numbered in declaration order, block by block. The ring also
/// fixes the ambient monomial order that polynomials are kept sorted by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    cycle: Option<usize>,
    blocks: Vec<Block>,
    names: Vec<String>,
    index: HashMap<String, usize>,
    display: Vec<usize>,
    ambient: OrderSpec,
}

impl RingSpec {
    /// A ring with the given blocks; the ambient order is degrevlex on each
    /// block in turn.
    pub fn new(blocks: Vec<Block>) -> Result<RingSpec> {
        Self::build(None, blocks, None)
    }

    fn build(
        cycle: Option<usize>,
        blocks: Vec<Block>,
        ambient: Option<OrderSpec>,
    ) -> Result<RingSpec> {
        let names: Vec<String> = blocks.iter().flat_map(|b| b.vars.iter().cloned()).collect();
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        let ambient = match ambient {
            Some(o) => o,
            None => {
                let mut start = 0;
                let stages = blocks
                    .iter()
                    .map(|b| {
                        let vars: Vec<usize> = (start..start + b.vars.len()).collect();
                        start += b.vars.len();
                        (vars, BaseOrder::DegRevLex)
                    })
                    .filter(|(v, _)| !v.is_empty())
                    .collect();
                OrderSpec::new(names.len(), stages)?
            }
        };
        if ambient.nvars() != names.len() {
            return Err(Error::DimensionMismatch {
                expected: names.len(),
                found: ambient.nvars(),
            });
        }
        let display = display_order(&names);
        Ok(RingSpec {
            cycle,
            blocks,
            names,
            index,
            display,
            ambient,
        })
    }

    /// `K[y, x]` for the `n`-cycle, optionally with the Rees parameter `s`.
    ///
    /// Block Y is `y1, …, y{n-1}, y0`, block X is `x1, …, x{n-1}, x0`, block S
    /// is `s`. The ambient order is the cycle product order (with `s`
    /// eliminated first when present).
    pub fn cycle(n: usize, with_s: bool) -> Result<RingSpec> {
        if n < 2 {
            return Err(Error::OutOfRange(format!("cycle size {n} < 2")));
        }
        let rotate =
            |p: &str| -> Vec<String> { (1..=n).map(|i| format!("{p}{}", i % n)).collect() };
        let mut blocks = vec![
            Block {
                name: "Y".into(),
                vars: rotate("y"),
            },
            Block {
                name: "X".into(),
                vars: rotate("x"),
            },
        ];
        if with_s {
            blocks.push(Block {
                name: "S".into(),
                vars: vec!["s".into()],
            });
        }
        let total = if with_s { 2 * n + 1 } else { 2 * n };
        if total > MAX_VARS {
            return Err(Error::TooManyVariables(total));
        }
        let paper = OrderSpec::cycle_product(total, n, 0, n);
        let ambient = if with_s {
            OrderSpec::eliminate_first(&[2 * n], &paper)?
        } else {
            paper
        };
        Self::build(Some(n), blocks, Some(ambient))
    }

    /// Single-block ring with variables named `prefix{lo}..=prefix{hi}` and the
    /// given base order (priority in declaration order).
    pub fn single_block(prefix: &str, lo: usize, hi: usize, base: BaseOrder) -> Result<RingSpec> {
        let vars: Vec<String> = (lo..=hi).map(|i| format!("{prefix}{i}")).collect();
        let nv = vars.len();
        let ambient = OrderSpec::new(nv, vec![((0..nv).collect(), base)])?;
        Self::build(
            None,
            vec![Block {
                name: prefix.to_uppercase(),
                vars,
            }],
            Some(ambient),
        )
    }

    /// Same variables, different ambient order.
    pub fn with_ambient(&self, ambient: OrderSpec) -> Result<RingSpec> {
        Self::build(self.cycle, self.blocks.clone(), Some(ambient))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn cycle_size(&self) -> Option<usize> {
        self.cycle
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn var(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Order in which variables are printed: `x` before `y` before anything
    /// else, numeric suffixes ascending.
    pub fn display_order(&self) -> &[usize] {
        &self.display
    }

    pub fn ambient(&self) -> &OrderSpec {
        &self.ambient
    }

    /// Variable indices of the named block.
    pub fn block_vars(&self, name: &str) -> Option<Vec<usize>> {
        let mut start = 0;
        for b in &self.blocks {
            if b.name == name {
                return Some((start..start + b.vars.len()).collect());
            }
            start += b.vars.len();
        }
        None
    }

    fn cyclic(&self, prefix: char, i: i64) -> usize {
        let n = self.cycle.expect("cyclic indexing on a non-cycle ring") as i64;
        let r = i.rem_euclid(n);
        // block layout: index r lives at position r-1, with r = 0 stored last
        let pos = if r == 0 { n - 1 } else { r - 1 } as usize;
        match prefix {
            'y' => pos,
            _ => self.cycle.unwrap() + pos,
        }
    }

    /// Index of `x_i` with `i` taken mod n. Panics on non-cycle rings.
    pub fn x(&self, i: i64) -> usize {
        self.cyclic('x', i)
    }

    /// Index of `y_i` with `i` taken mod n. Panics on non-cycle rings.
    pub fn y(&self, i: i64) -> usize {
        self.cyclic('y', i)
    }

    /// Index of `s`, if the ring carries it.
    pub fn s(&self) -> Option<usize> {
        self.index.get("s").copied()
    }

    /// Drop whole variables, keeping the remaining ones in order. Returns the
    /// new ring together with the old→new index map.
    pub fn without(
        &self,
        drop: &[usize],
        ambient: impl FnOnce(&[Option<usize>]) -> Result<OrderSpec>,
    ) -> Result<(RingSpec, Vec<Option<usize>>)> {
        let mut map = vec![None; self.nvars()];
        let mut next = 0;
        let mut blocks = Vec::new();
        let mut pos = 0;
        for b in &self.blocks {
            let mut kept = Vec::new();
            for v in &b.vars {
                if !drop.contains(&pos) {
                    map[pos] = Some(next);
                    next += 1;
                    kept.push(v.clone());
                }
                pos += 1;
            }
            if !kept.is_empty() {
                blocks.push(Block {
                    name: b.name.clone(),
                    vars: kept,
                });
            }
        }
        let order = ambient(&map)?;
        let cycle = if drop.iter().all(|&d| Some(d) == self.s()) {
            self.cycle
        } else {
            None
        };
        Ok((Self::build(cycle, blocks, Some(order))?, map))
    }
}

fn display_order(names: &[String]) -> Vec<usize> {
    let key = |name: &str| {
        let split = name
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(name.len());
        let (prefix, digits) = name.split_at(split);
        let rank = match prefix {
            "x" => 0,
            "y" => 1,
            _ => 2,
        };
        (
            rank,
            prefix.to_string(),
            digits.parse::<u64>().unwrap_or(0),
            name.to_string(),
        )
    };
    let mut idx: Vec<usize> = (0..names.len()).collect();
    idx.sort_by_cached_key(|&i| key(&names[i]));
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_layout() {
        let r = RingSpec::cycle(5, true).unwrap();
        assert_eq!(r.nvars(), 11);
        assert_eq!(r.names()[..5], ["y1", "y2", "y3", "y4", "y0"]);
        assert_eq!(r.name(r.x(0)), "x0");
        assert_eq!(r.name(r.x(5)), "x0");
        assert_eq!(r.name(r.x(-1)), "x4");
        assert_eq!(r.name(r.y(7)), "y2");
        assert_eq!(r.s(), Some(10));
    }

    #[test]
    fn rejects_duplicates_and_oversize() {
        let b = Block {
            name: "A".into(),
            vars: vec!["a".into(), "a".into()],
        };
        assert_eq!(
            RingSpec::new(vec![b]),
            Err(Error::DuplicateVariable("a".into()))
        );
        assert!(matches!(
            RingSpec::cycle(16, true),
            Err(Error::TooManyVariables(33))
        ));
    }
}
