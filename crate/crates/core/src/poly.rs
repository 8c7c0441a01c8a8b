//! Sparse multivariate polynomials with exact rational coefficients over a
//! declared variable list.
//!
//! Monomials are compared degree first, then lexicographically in the
//! declared variable order (graded lex). Bases of a fixed degree are listed
//! in descending order, so for vars (a, b, c) and degree 2 the basis reads
//! a^2, ab, ac, b^2, bc, c^2 — the layout used by all graded matrices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rat_mod, Fp, Rat};

/// Immutable ordered list of variable names, cheap to clone.
#[derive(Debug, Clone, Eq)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> VarSet {
        VarSet(Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|s| s.as_str())
    }

    /// Concatenation, used to work in the product ring (source ⊗ target).
    pub fn concat(&self, other: &VarSet) -> VarSet {
        let mut v: Vec<String> = self.0.as_ref().clone();
        v.extend(other.0.iter().cloned());
        VarSet(Arc::new(v))
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(","))
    }
}

/// Exponent vector with cached total degree. Ordering is graded lex in the
/// declared variable order (degree first, then exponents lexicographically).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let deg = exps.iter().sum();
        Monomial { deg, exps }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial { deg: 0, exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { deg: 1, exps }
    }

    pub fn total_degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { deg: self.deg + other.deg, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self when self divides other.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial { deg: other.deg - self.deg, exps })
    }

    fn render(&self, vars: &VarSet) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars.name(i).to_string()),
                _ => parts.push(format!("{}^{}", vars.name(i), e)),
            }
        }
        parts.join("*")
    }
}

/// Sparse polynomial: monomial → nonzero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Polynomial {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarSet) -> Polynomial {
        Polynomial::constant(vars, Rat::one())
    }

    pub fn constant(vars: &VarSet, c: Rat) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn var(vars: &VarSet, i: usize) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        p.terms.insert(Monomial::var(vars.len(), i), Rat::one());
        p
    }

    pub fn term(vars: &VarSet, m: Monomial, c: Rat) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            debug_assert_eq!(m.exps.len(), vars.len());
            p.terms.insert(m, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree; None stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.deg).max()
    }

    /// Degree in one variable.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exps[i]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.deg);
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Common degree of all terms, when homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.degree()
        }
    }

    /// Largest monomial with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scalar_mul(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { vars: self.vars.clone(), terms }
    }

    /// self * (c * m) without building an intermediate polynomial.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, a)| (mm.mul(m), a * c))
            .collect();
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient self / b. Fails with `NonDivisible` when b does not
    /// divide self, which downstream is a diagnostic for a mis-selected
    /// minor or a non-acyclic graded piece.
    pub fn exact_div(&self, b: &Polynomial) -> Result<Polynomial> {
        assert_eq!(self.vars, b.vars, "variable lists differ");
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (bm, bc) = b.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(&self.vars);
        while let Some((rm, rc)) = rem.leading() {
            let m = bm.div_into(rm).ok_or(Error::NonDivisible)?;
            let c = rc / &bc;
            // rem -= c*m*b; leading term cancels so degree strictly drops
            let sub = b.mul_term(&m, &c);
            rem = &rem - &sub;
            quo.add_term(m, c);
        }
        Ok(quo)
    }

    /// Substitute subs\[i\] for variable i; subs must all be homogeneous of
    /// one common degree so degrees stay readable.
    pub fn compose(&self, subs: &[Polynomial]) -> Result<Polynomial> {
        if subs.len() != self.vars.len() {
            return Err(Error::Input(format!(
                "compose: {} substitutions for {} variables",
                subs.len(),
                self.vars.len()
            )));
        }
        if subs.is_empty() {
            return Err(Error::Input("compose: empty substitution list".into()));
        }
        let tvars = subs[0].vars().clone();
        let mut common: Option<u32> = None;
        for s in subs {
            if *s.vars() != tvars {
                return Err(Error::Input("compose: substitutions over mixed variable lists".into()));
            }
            if s.is_zero() {
                continue;
            }
            match (common, s.homogeneous_degree()) {
                (_, None) => {
                    return Err(Error::Input("compose: inhomogeneous substitution".into()))
                }
                (None, Some(d)) => common = Some(d),
                (Some(c), Some(d)) if c == d => {}
                _ => {
                    return Err(Error::Input(
                        "compose: substitutions of mixed degrees".into(),
                    ))
                }
            }
        }
        // power cache per variable
        let mut pows: Vec<Vec<Polynomial>> =
            subs.iter().map(|s| vec![Polynomial::one(&tvars), s.clone()]).collect();
        let mut out = Polynomial::zero(&tvars);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(&tvars, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e as usize {
                    let next = &pows[i][pows[i].len() - 1] * &subs[i];
                    pows[i].push(next);
                }
                prod = &prod * &pows[i][e as usize];
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[i] -= 1;
            out.add_term(Monomial::new(exps), c * Rat::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Positive rational c such that self/c has coprime integer coefficients;
    /// zero for the zero polynomial.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        Rat::new(num_gcd, den_lcm)
    }

    /// Content 1 and positive leading coefficient; canonical representative
    /// of the class "up to units".
    pub fn normalize(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        self.scalar_mul(&c.recip())
    }

    /// Evaluate all variables at a point over F_p. None when a coefficient
    /// denominator is divisible by p.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> Option<Fp> {
        debug_assert_eq!(point.len(), self.vars.len());
        let mut acc = Fp::zero(p);
        for (m, c) in &self.terms {
            let mut t = rat_mod(c, p)?;
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&Fp::from_u64(point[i], p).pow(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        Some(acc)
    }

    /// Coefficient vector over a graded basis; None when some monomial of
    /// self is not listed (wrong degree).
    pub fn coeff_vec(&self, basis: &GradedBasis) -> Option<Vec<Rat>> {
        let mut v = vec![Rat::zero(); basis.len()];
        for (m, c) in &self.terms {
            let i = basis.index_of(m)?;
            v[i] = c.clone();
        }
        Some(v)
    }

    pub fn from_coeff_vec(basis: &GradedBasis, coeffs: &[Rat]) -> Polynomial {
        assert_eq!(coeffs.len(), basis.len());
        let mut p = Polynomial::zero(&basis.vars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(basis.monomial(i).clone(), c.clone());
            }
        }
        p
    }

    /// Reinterpret over a superset of variables; `map[i]` is the position of
    /// old variable i in `target`.
    pub fn lift_vars(&self, target: &VarSet, map: &[usize]) -> Polynomial {
        let mut p = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.exps.iter().enumerate() {
                exps[map[i]] = e;
            }
            p.terms.insert(Monomial::new(exps), c.clone());
        }
        p
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { vars: self.vars.clone(), terms }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m.mul(m2), c * c2);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form, parseable back bit-exactly: terms in descending
    /// order, explicit `*` everywhere, rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = m.render(&self.vars);
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

/// All monomials of one total degree, in descending graded-lex order, with
/// an index for coefficient-vector layouts.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    vars: VarSet,
    degree: u32,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedBasis {
    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monos[i]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// The monomial basis of the degree-mu piece of the polynomial ring.
pub fn mono_basis(vars: &VarSet, mu: u32) -> GradedBasis {
    let mut monos = Vec::new();
    let mut exps = vec![0u32; vars.len()];
    fill_desc(&mut monos, &mut exps, 0, mu, vars.len());
    let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    GradedBasis { vars: vars.clone(), degree: mu, monos, index }
}

fn fill_desc(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, pos: usize, left: u32, nvars: usize) {
    if pos + 1 == nvars {
        exps[pos] = left;
        out.push(Monomial::new(exps.clone()));
        exps[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[pos] = e;
        fill_desc(out, exps, pos + 1, left - e, nvars);
        exps[pos] = 0;
    }
}

/// binomial(n, k) as usize, for dimension checks.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::scalar::{rat, rat2};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn xyz() -> VarSet {
        VarSet::new(&["x", "y", "z"])
    }

    pub(crate) fn random_poly(vars: &VarSet, maxdeg: u32, rng: &mut ChaCha12Rng) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        let nterms = rng.gen_range(1..=5);
        for _ in 0..nterms {
            let mut exps = vec![0u32; vars.len()];
            let deg = rng.gen_range(0..=maxdeg);
            for _ in 0..deg {
                let i = rng.gen_range(0..vars.len());
                exps[i] += 1;
            }
            let c = rat2(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            p = &p + &Polynomial::term(vars, Monomial::new(exps), c);
        }
        p
    }

    fn random_homogeneous(vars: &VarSet, deg: u32, rng: &mut ChaCha12Rng) -> Polynomial {
        let basis = mono_basis(vars, deg);
        let mut p = Polynomial::zero(vars);
        for m in basis.monomials() {
            if rng.gen_bool(0.6) {
                let c = rat(rng.gen_range(-5..=5));
                p = &p + &Polynomial::term(vars, m.clone(), c);
            }
        }
        p
    }

    #[test]
    fn mono_basis_matches_row_labels() {
        let abc = VarSet::new(&["a", "b", "c"]);
        let b = mono_basis(&abc, 2);
        let got: Vec<String> = b.monomials().iter().map(|m| m.render(&abc)).collect();
        assert_eq!(got, vec!["a^2", "a*b", "a*c", "b^2", "b*c", "c^2"]);
        assert_eq!(b.len(), 6);
    }

    #[test]
    fn mono_basis_degree_zero_and_counts() {
        let abc = VarSet::new(&["a", "b", "c"]);
        let b0 = mono_basis(&abc, 0);
        assert_eq!(b0.len(), 1);
        assert!(b0.monomial(0).is_one());
        let st = VarSet::new(&["s", "t"]);
        assert_eq!(mono_basis(&st, 3).len(), 4);
        // length = binomial(n-1+mu, mu) over a small grid
        for nv in 1..=5usize {
            let vars = VarSet::new(&(0..nv).map(|i| format!("v{}", i)).collect::<Vec<_>>());
            for mu in 0..=8u32 {
                assert_eq!(mono_basis(&vars, mu).len(), binomial(nv - 1 + mu as usize, mu as usize));
            }
        }
    }

    #[test]
    fn ring_arithmetic() {
        let v = xyz();
        let x = Polynomial::var(&v, 0);
        let y = Polynomial::var(&v, 1);
        let sum = &x + &y;
        let diff = &x - &y;
        let prod = &sum * &diff;
        let expect = &(&x * &x) - &(&y * &y);
        assert_eq!(prod, expect);
        // b(a+c)*a = a^2 b + abc
        let abc = VarSet::new(&["a", "b", "c"]);
        let p = parse_polynomial("b*(a+c)", &abc).unwrap();
        let a = Polynomial::var(&abc, 0);
        assert_eq!(&p * &a, parse_polynomial("a^2*b + a*b*c", &abc).unwrap());
        // additive inverse
        let q = parse_polynomial("x^2 - 3*y*z + 1/2", &v).unwrap();
        assert!((&q + &q.scalar_mul(&rat(-1))).is_zero());
    }

    #[test]
    fn compose_conic_and_coordinates() {
        let st = VarSet::new(&["s", "t"]);
        let v = xyz();
        let subs = vec![
            parse_polynomial("s^2", &st).unwrap(),
            parse_polynomial("s*t", &st).unwrap(),
            parse_polynomial("t^2", &st).unwrap(),
        ];
        // xz - y^2 pulls back to s^2 t^2 - (st)^2 = 0
        let h = parse_polynomial("x*z - y^2", &v).unwrap();
        assert!(h.compose(&subs).unwrap().is_zero());
        // coordinate substitution returns the form itself
        let x = Polynomial::var(&v, 0);
        assert_eq!(x.compose(&subs).unwrap(), subs[0]);
    }

    #[test]
    fn compose_example_parametrization_kills_its_equation() {
        let abc = VarSet::new(&["a", "b", "c"]);
        let t4 = VarSet::new(&["x", "y", "z", "t"]);
        let subs = vec![
            parse_polynomial("a*c^2", &abc).unwrap(),
            parse_polynomial("b^2*(a+c)", &abc).unwrap(),
            parse_polynomial("a*b*(a+c)", &abc).unwrap(),
            parse_polynomial("b*c*(a+c)", &abc).unwrap(),
        ];
        let h = parse_polynomial("x*y*(z+t) - z*t^2", &t4).unwrap();
        assert!(h.compose(&subs).unwrap().is_zero());
    }

    #[test]
    fn compose_rejects_bad_substitutions() {
        let st = VarSet::new(&["s", "t"]);
        let v = xyz();
        let h = parse_polynomial("x + y + z", &v).unwrap();
        let bad_len = vec![parse_polynomial("s", &st).unwrap()];
        assert!(h.compose(&bad_len).is_err());
        let mixed = vec![
            parse_polynomial("s", &st).unwrap(),
            parse_polynomial("s^2", &st).unwrap(),
            parse_polynomial("t", &st).unwrap(),
        ];
        assert!(h.compose(&mixed).is_err());
        let inhomog = vec![
            parse_polynomial("s + 1", &st).unwrap(),
            parse_polynomial("t", &st).unwrap(),
            parse_polynomial("s", &st).unwrap(),
        ];
        assert!(h.compose(&inhomog).is_err());
    }

    #[test]
    fn exact_division() {
        let v = VarSet::new(&["x", "y", "z", "t"]);
        let h = parse_polynomial("x*y*z + x*y*t - t^2*z", &v).unwrap();
        let y3 = parse_polynomial("y^3", &v).unwrap();
        let a = &(-&h) * &y3; // -y^3 (xyz + xyt - t^2 z)
        let q = a.exact_div(&y3).unwrap();
        assert_eq!(q, -&h);
        // p / 1 = p
        let one = Polynomial::one(&v);
        assert_eq!(h.exact_div(&one).unwrap(), h);
        // (x^2 - y^2) / (x - y) = x + y
        let n = parse_polynomial("x^2 - y^2", &v).unwrap();
        let d = parse_polynomial("x - y", &v).unwrap();
        assert_eq!(n.exact_div(&d).unwrap(), parse_polynomial("x + y", &v).unwrap());
        // failure paths
        assert_eq!(n.exact_div(&Polynomial::zero(&v)), Err(Error::DivisionByZero));
        let r = parse_polynomial("x^2 + y", &v).unwrap().exact_div(&d);
        assert_eq!(r, Err(Error::NonDivisible));
    }

    #[test]
    fn divide_after_multiply_roundtrips() {
        let v = xyz();
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 120 {
            let p = random_poly(&v, 3, &mut rng);
            let q = random_poly(&v, 3, &mut rng);
            if q.is_zero() {
                continue;
            }
            let prod = &p * &q;
            assert_eq!(prod.exact_div(&q).unwrap(), p);
            done += 1;
        }
    }

    #[test]
    fn compose_is_ring_homomorphism() {
        let st = VarSet::new(&["s", "t"]);
        let v = xyz();
        let mut rng = ChaCha12Rng::seed_from_u64(23);
        for _ in 0..40 {
            let subs = vec![
                random_homogeneous(&st, 2, &mut rng),
                random_homogeneous(&st, 2, &mut rng),
                random_homogeneous(&st, 2, &mut rng),
            ];
            let h1 = random_poly(&v, 2, &mut rng);
            let h2 = random_poly(&v, 2, &mut rng);
            let lhs = (&h1 * &h2).compose(&subs).unwrap();
            let rhs = &h1.compose(&subs).unwrap() * &h2.compose(&subs).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn homogeneity_bookkeeping() {
        let v = xyz();
        let p = parse_polynomial("x*y + z^2", &v).unwrap();
        assert_eq!(p.homogeneous_degree(), Some(2));
        let q = parse_polynomial("x + z^2", &v).unwrap();
        assert!(q.homogeneous_degree().is_none());
        assert!(Polynomial::zero(&v).is_homogeneous());
        assert_eq!(Polynomial::zero(&v).degree(), None);
    }

    #[test]
    fn normalization_is_canonical() {
        let v = xyz();
        let p = parse_polynomial("-2/3*x^2 + 4*y*z", &v).unwrap();
        let n = p.normalize();
        assert_eq!(n, parse_polynomial("x^2 - 6*y*z", &v).unwrap());
        assert_eq!(n, n.normalize());
        assert_eq!(p.scalar_mul(&rat2(-7, 5)).normalize(), n);
    }
}
