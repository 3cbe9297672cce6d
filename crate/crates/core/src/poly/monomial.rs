use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::poly::ring::RingSpec;
use crate::poly::MAX_VARS;

/// Dense exponent vector with cached total degree and support mask.
///
/// Storage is inline (`MAX_VARS` slots); only the first `nvars` entries are
/// meaningful and the rest stay zero, so derived comparisons are sound.
#[derive(Clone, Copy)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    degree: u32,
    support: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        assert!(nvars <= MAX_VARS);
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            degree: 0,
            support: 0,
        }
    }

    pub fn from_exponents(exps: &[u16]) -> Result<Monomial> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = e;
        }
        m.refresh();
        Ok(m)
    }

    /// The single variable `var` raised to `exp`.
    pub fn var(nvars: usize, var: usize, exp: u16) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[var] = exp;
        m.refresh();
        m
    }

    /// Product of the given variables (with repetition).
    pub fn product_of(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Monomial {
        let mut m = Monomial::one(nvars);
        for v in vars {
            m.exps[v] += 1;
        }
        m.refresh();
        m
    }

    #[inline]
    fn refresh(&mut self) {
        let mut d = 0u32;
        let mut s = 0u32;
        for (i, &e) in self.exps[..self.nvars as usize].iter().enumerate() {
            d += e as u32;
            if e > 0 {
                s |= 1 << i;
            }
        }
        self.degree = d;
        self.support = s;
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Bit `i` set iff variable `i` occurs.
    #[inline]
    pub fn support(&self) -> u32 {
        self.support
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Sum of exponents over `vars`.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.exps[v] as u32).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents().iter().all(|&e| e <= 1)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.support & !other.support != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support & other.support == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        m.degree = self.degree + other.degree;
        m.support = self.support | other.support;
        m
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] -= other.exps[i];
        }
        m.refresh();
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] = self.exps[i].max(other.exps[i]);
        }
        m.refresh();
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] = self.exps[i].min(other.exps[i]);
        }
        m.refresh();
        m
    }

    /// Reindex through `map` into a ring with `nvars` variables. Returns `None`
    /// if a variable that is mapped away occurs.
    pub fn remap(&self, map: &[Option<usize>], nvars: usize) -> Option<Monomial> {
        let mut m = Monomial::one(nvars);
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            m.exps[map[i]?] = e;
        }
        m.refresh();
        Some(m)
    }

    /// Swap exponents of two variables.
    pub fn swap_vars(&self, a: usize, b: usize) -> Monomial {
        let mut m = *self;
        m.exps.swap(a, b);
        m.refresh();
        m
    }

    /// Parses `*`-joined powers such as `x5*y1^2`, or `1`.
    pub fn parse(ring: &RingSpec, s: &str) -> Result<Monomial> {
        let mut m = Monomial::one(ring.nvars());
        let s = s.trim();
        if s == "1" {
            return Ok(m);
        }
        let mut offset = 0;
        for factor in s.split('*') {
            let f = factor.trim();
            let (name, exp) = match f.split_once('^') {
                Some((v, e)) => {
                    let e: u16 = e.trim().parse().map_err(|_| Error::Parse {
                        pos: offset,
                        msg: format!("bad exponent in `{f}`"),
                    })?;
                    (v.trim(), e)
                }
                None => (f, 1),
            };
            let v = ring.var(name)?;
            m.exps[v] = m.exps[v].checked_add(exp).ok_or(Error::ExponentOverflow)?;
            offset += factor.len() + 1;
        }
        m.refresh();
        Ok(m)
    }

    /// Canonical text, variables in the ring's display order.
    pub fn display<'a>(&'a self, ring: &'a RingSpec) -> impl fmt::Display + 'a {
        MonoDisplay { m: self, ring }
    }
}

struct MonoDisplay<'a> {
    m: &'a Monomial,
    ring: &'a RingSpec,
}

impl fmt::Display for MonoDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for &i in self.ring.display_order() {
            let e = self.m.exponents()[i];
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl PartialEq for Monomial {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nvars.hash(state);
        self.exponents().hash(state);
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}
