//! Block monomial orders.
//!
//! An [`OrderSpec`] is a sequence of stages. Each stage owns a disjoint set of
//! variables (listed from highest to lowest priority) and a base order;
//! monomials are compared stage by stage and the first stage that tells them
//! apart decides.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseOrder {
    Lex,
    #[serde(rename = "degrevlex")]
    DegRevLex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stage {
    pub vars: Vec<usize>,
    pub base: BaseOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderSpec {
    nvars: usize,
    stages: Vec<Stage>,
    /// Variables of the leading stage when it was added as an elimination block.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eliminates: Option<Vec<usize>>,
}

impl OrderSpec {
    pub fn new(nvars: usize, stages: Vec<(Vec<usize>, BaseOrder)>) -> Result<OrderSpec> {
        let mut seen = vec![false; nvars];
        for (vars, _) in &stages {
            for &v in vars {
                if v >= nvars {
                    return Err(Error::InvalidOrder(format!("variable {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidOrder(format!("variable {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidOrder(format!("variable {v} not covered")));
        }
        let stages = stages
            .into_iter()
            .filter(|(v, _)| !v.is_empty())
            .map(|(vars, base)| Stage { vars, base })
            .collect();
        Ok(OrderSpec {
            nvars,
            stages,
            eliminates: None,
        })
    }

    /// Degrevlex on all variables, in index order.
    pub fn degrevlex(nvars: usize) -> OrderSpec {
        Self::new(nvars, vec![((0..nvars).collect(), BaseOrder::DegRevLex)]).unwrap()
    }

    /// Lex on all variables, in index order.
    pub fn lex(nvars: usize) -> OrderSpec {
        Self::new(nvars, vec![((0..nvars).collect(), BaseOrder::Lex)]).unwrap()
    }

    /// The product order used throughout for cycle rings: degrevlex on the Y
    /// block (`y1 > … > y{n-1} > y0`), ties broken by lex on the X block
    /// (`x1 > … > x{n-1} > x0`). Variables outside both blocks form a trailing
    /// degrevlex stage.
    pub fn cycle_product(nvars: usize, n: usize, y_start: usize, x_start: usize) -> OrderSpec {
        let ys: Vec<usize> = (y_start..y_start + n).collect();
        let xs: Vec<usize> = (x_start..x_start + n).collect();
        let rest: Vec<usize> = (0..nvars)
            .filter(|v| !ys.contains(v) && !xs.contains(v))
            .collect();
        Self::new(
            nvars,
            vec![
                (ys, BaseOrder::DegRevLex),
                (xs, BaseOrder::Lex),
                (rest, BaseOrder::DegRevLex),
            ],
        )
        .expect("cycle product order")
    }

    /// Prepends a degrevlex stage on `drop`, removing those variables from the
    /// stages of `rest`. The result is an elimination order for `drop`.
    pub fn eliminate_first(drop: &[usize], rest: &OrderSpec) -> Result<OrderSpec> {
        let mut stages = vec![(drop.to_vec(), BaseOrder::DegRevLex)];
        for st in &rest.stages {
            let vars = st
                .vars
                .iter()
                .copied()
                .filter(|v| !drop.contains(v))
                .collect();
            stages.push((vars, st.base));
        }
        let mut o = Self::new(rest.nvars, stages)?;
        let mut elim = drop.to_vec();
        elim.sort_unstable();
        o.eliminates = Some(elim);
        Ok(o)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    /// Sorted variable set of the elimination block, if any.
    pub fn eliminated(&self) -> Option<&[usize]> {
        self.eliminates.as_deref()
    }

    /// True if the variables of `set` are exactly those of some prefix of stages.
    pub fn is_elimination_for(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return true;
        }
        let mut want: Vec<usize> = set.to_vec();
        want.sort_unstable();
        want.dedup();
        let mut acc = Vec::new();
        for st in &self.stages {
            acc.extend_from_slice(&st.vars);
            acc.sort_unstable();
            if acc == want {
                return true;
            }
            if acc.len() >= want.len() {
                return false;
            }
        }
        false
    }

    /// Rewrites variable indices through `map` (dropped variables map to `None`).
    pub fn remap(&self, map: &[Option<usize>], new_nvars: usize) -> Result<OrderSpec> {
        let stages = self
            .stages
            .iter()
            .map(|st| (st.vars.iter().filter_map(|&v| map[v]).collect(), st.base))
            .collect();
        let mut o = Self::new(new_nvars, stages)?;
        o.eliminates = self
            .eliminates
            .as_ref()
            .map(|e| e.iter().filter_map(|&v| map[v]).collect::<Vec<usize>>())
            .filter(|e| !e.is_empty());
        Ok(o)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        for st in &self.stages {
            match st.base {
                BaseOrder::Lex => {
                    for &v in &st.vars {
                        match ea[v].cmp(&eb[v]) {
                            Ordering::Equal => {}
                            o => return o,
                        }
                    }
                }
                BaseOrder::DegRevLex => {
                    let (mut da, mut db) = (0u32, 0u32);
                    for &v in &st.vars {
                        da += ea[v] as u32;
                        db += eb[v] as u32;
                    }
                    if da != db {
                        return da.cmp(&db);
                    }
                    for &v in st.vars.iter().rev() {
                        match ea[v].cmp(&eb[v]) {
                            Ordering::Equal => {}
                            o => return o.reverse(),
                        }
                    }
                }
            }
        }
        Ordering::Equal
    }

    /// Checked comparison: both monomials must have `nvars` entries.
    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.nvars {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars,
                    found: m.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }
}

/// Compare two monomials under `order`.
pub fn monomial_cmp(order: &OrderSpec, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    order.try_cmp(a, b)
}
