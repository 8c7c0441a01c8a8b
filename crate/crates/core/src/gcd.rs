//! Multivariate polynomial gcd over the rationals.
//!
//! Strategy: recurse on a main variable with content/primitive-part
//! splitting and a primitive pseudo-remainder sequence. Before running the
//! sequence, the inputs are projected to one variable over a large prime
//! field at a random point; a degree-preserving projection with constant
//! gcd certifies that the primitive parts are coprime (the projected gcd
//! degree can only overshoot, never undershoot, when leading coefficients
//! survive), and otherwise bounds the result as a consistency check.
//! Correct over Q because the polynomial ring is factorial; the result is
//! verified by exact division and returned normalized.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VarSet};
use crate::scalar::{Fp, DEFAULT_PRIME};

/// Normalized gcd (content 1, positive leading coefficient). Errors only
/// when both inputs are zero.
pub fn gcd_poly(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    assert_eq!(a.vars(), b.vars(), "variable lists differ");
    if a.is_zero() && b.is_zero() {
        return Err(Error::Input("gcd(0, 0) is undefined".into()));
    }
    if a.is_zero() {
        return Ok(b.normalize());
    }
    if b.is_zero() {
        return Ok(a.normalize());
    }
    let g = gcd_inner(a, b)?;
    // certain verification; failure would mean a bug in the sequence
    a.exact_div(&g)
        .and_then(|_| b.exact_div(&g))
        .map_err(|_| Error::Internal("gcd candidate does not divide the inputs".into()))?;
    Ok(g.normalize())
}

/// gcd of a list, ignoring zeros; zero when all entries are zero.
pub fn gcd_list(polys: &[Polynomial]) -> Result<Polynomial> {
    let mut acc: Option<Polynomial> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => p.normalize(),
            Some(g) => {
                if g.num_terms() == 1 && g.degree() == Some(0) {
                    // already a unit; no smaller gcd exists
                    return Ok(g);
                }
                gcd_poly(&g, p)?
            }
        });
    }
    match (acc, polys.first()) {
        (Some(g), _) => Ok(g),
        (None, Some(p)) => Ok(Polynomial::zero(p.vars())),
        (None, None) => Err(Error::Input("gcd of an empty list".into())),
    }
}

fn present_vars(p: &Polynomial) -> Vec<usize> {
    (0..p.vars().len())
        .filter(|&i| p.degree_in(i).unwrap_or(0) > 0)
        .collect()
}

fn gcd_inner(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let vars = a.vars().clone();
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return Ok(Polynomial::one(&vars));
    }
    let pa = present_vars(a);
    let pb = present_vars(b);
    let common: Vec<usize> = pa.iter().copied().filter(|i| pb.contains(i)).collect();
    if common.is_empty() {
        return Ok(Polynomial::one(&vars));
    }
    // main variable: smallest worst-case degree, ties to the earliest name
    let x = *common
        .iter()
        .min_by_key(|&&i| {
            let da = a.degree_in(i).unwrap_or(0);
            let db = b.degree_in(i).unwrap_or(0);
            (da.min(db), i)
        })
        .unwrap();

    let ua = UPoly::split(a, x);
    let ub = UPoly::split(b, x);
    let ca = ua.content()?;
    let cb = ub.content()?;
    let cg = gcd_poly(&ca, &cb)?;
    let ua = ua.div_coeffs(&ca)?;
    let ub = ub.div_coeffs(&cb)?;
    let (f, g) = if ua.deg() >= ub.deg() { (ua, ub) } else { (ub, ua) };

    let image_deg = projected_gcd_degree(&f, &g, x);
    if image_deg == Some(0) {
        return Ok(cg);
    }
    let pp = primitive_prs(f, g)?;
    if let Some(bound) = image_deg {
        if pp.deg() > bound {
            return Err(Error::Internal(
                "pseudo-remainder gcd exceeds its prime-field degree bound".into(),
            ));
        }
    }
    Ok(&cg * &pp.to_poly())
}

/// Degree of gcd of the inputs projected to the main variable over F_p at a
/// random point, when a degree-preserving projection is found.
fn projected_gcd_degree(f: &UPoly, g: &UPoly, x: usize) -> Option<usize> {
    let p = DEFAULT_PRIME;
    let vars = f.vars.clone();
    let mut rng = ChaCha12Rng::seed_from_u64(0xC0FFEE);
    'attempt: for _ in 0..3 {
        let mut point = vec![0u64; vars.len()];
        for (i, slot) in point.iter_mut().enumerate() {
            if i != x {
                *slot = rng.gen_range(1..p);
            }
        }
        let fi = match project(f, &point, p) {
            Some(v) => v,
            None => continue 'attempt,
        };
        let gi = match project(g, &point, p) {
            Some(v) => v,
            None => continue 'attempt,
        };
        if fi.len() != f.deg() + 1 || gi.len() != g.deg() + 1 {
            continue 'attempt; // leading coefficient vanished; try elsewhere
        }
        return Some(fp_gcd_degree(fi, gi, p));
    }
    None
}

fn project(u: &UPoly, point: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(u.coeffs.len());
    for c in &u.coeffs {
        out.push(c.eval_mod(point, p)?.v);
    }
    while let Some(&0) = out.last() {
        out.pop();
    }
    Some(out)
}

fn fp_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while let Some(&0) = v.last() {
            v.pop();
        }
    };
    loop {
        if b.is_empty() {
            return a.len().saturating_sub(1);
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // a -= lc(a)/lc(b) * x^(da-db) * b
        let shift = a.len() - b.len();
        let factor = Fp::from_u64(*a.last().unwrap(), p)
            .mul(&Fp::from_u64(*b.last().unwrap(), p).inv().unwrap());
        for (i, bv) in b.iter().enumerate() {
            let sub = Fp::from_u64(*bv, p).mul(&factor);
            let idx = i + shift;
            a[idx] = Fp::from_u64(a[idx], p).sub(&sub).v;
        }
        trim(&mut a);
    }
}

/// Dense view in one main variable; coefficients are polynomials free of it.
#[derive(Debug, Clone)]
struct UPoly {
    vars: VarSet,
    x: usize,
    coeffs: Vec<Polynomial>,
}

impl UPoly {
    fn split(p: &Polynomial, x: usize) -> UPoly {
        let vars = p.vars().clone();
        let dx = p.degree_in(x).unwrap_or(0) as usize;
        let mut coeffs = vec![Polynomial::zero(&vars); dx + 1];
        for (m, c) in p.terms() {
            let k = m.exp(x) as usize;
            let mut exps = m.exps().to_vec();
            exps[x] = 0;
            let part = Polynomial::term(&vars, crate::poly::Monomial::new(exps), c.clone());
            coeffs[k] = &coeffs[k] + &part;
        }
        let mut u = UPoly { vars, x, coeffs };
        u.trim();
        u
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Polynomial::zero(&self.vars));
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn lc(&self) -> &Polynomial {
        self.coeffs.last().unwrap()
    }

    fn to_poly(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (k, c) in self.coeffs.iter().enumerate() {
            let xk = Polynomial::var(&self.vars, self.x).pow(k as u32);
            out = &out + &(c * &xk);
        }
        out
    }

    /// gcd of the coefficients (the content with respect to the main
    /// variable).
    fn content(&self) -> Result<Polynomial> {
        gcd_list(&self.coeffs)
    }

    fn div_coeffs(&self, d: &Polynomial) -> Result<UPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if c.is_zero() {
                coeffs.push(c.clone());
            } else {
                coeffs.push(c.exact_div(d)?);
            }
        }
        Ok(UPoly { vars: self.vars.clone(), x: self.x, coeffs })
    }

    fn scale(&self, by: &Polynomial) -> UPoly {
        let coeffs = self.coeffs.iter().map(|c| c * by).collect();
        let mut u = UPoly { vars: self.vars.clone(), x: self.x, coeffs };
        u.trim();
        u
    }

    /// self - by * x^shift * other
    fn sub_shifted(&self, other: &UPoly, shift: usize, by: &Polynomial) -> UPoly {
        let len = self.coeffs.len().max(other.coeffs.len() + shift);
        let mut coeffs = vec![Polynomial::zero(&self.vars); len];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] = c.clone();
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k + shift] = &coeffs[k + shift] - &(c * by);
        }
        let mut u = UPoly { vars: self.vars.clone(), x: self.x, coeffs };
        u.trim();
        u
    }

    /// Divide out the full content: rational first, then polynomial.
    fn primitive(&self) -> Result<UPoly> {
        let whole = self.to_poly().normalize();
        let u = UPoly::split(&whole, self.x);
        let c = u.content()?;
        u.div_coeffs(&c)
    }
}

fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = b.deg();
    let lcb = b.lc().clone();
    while !r.is_zero() && r.deg() >= db {
        let dr = r.deg();
        let lcr = r.lc().clone();
        let next = r.scale(&lcb).sub_shifted(b, dr - db, &lcr);
        debug_assert!(next.is_zero() || next.deg() < dr);
        r = next;
    }
    r
}

/// gcd of two primitive polynomials in the main variable, itself primitive.
fn primitive_prs(mut f: UPoly, mut g: UPoly) -> Result<UPoly> {
    loop {
        let r = prem(&f, &g);
        if r.is_zero() {
            return g.primitive();
        }
        if r.deg() == 0 {
            // nonzero remainder free of the main variable: primitive parts
            // are coprime
            let one = Polynomial::one(&f.vars);
            return Ok(UPoly { vars: f.vars.clone(), x: f.x, coeffs: vec![one] });
        }
        let r = r.primitive()?;
        f = g;
        g = r;
    }
}
