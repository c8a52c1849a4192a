//! Multivariate GCD by recursive content / primitive-part splitting and a
//! primitive pseudo-remainder sequence in one chosen variable.

use crate::error::Result;
use crate::poly::Poly;

/// Monic greatest common divisor. `gcd(p, 0)` is `p` made monic and
/// `gcd(0, 0)` is zero.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.space() != b.space() {
        return Err(crate::Error::SpaceMismatch(a.space(), b.space()));
    }
    Ok(gcd(a, b))
}

pub(crate) fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let space = a.space();
    if a.is_constant() || b.is_constant() {
        return Poly::one(space);
    }
    // Peel off variable powers first; monomials factor trivially.
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = ma.gcd(&mb);
    let a1 = a.div_monomial(&ma).unwrap();
    let b1 = b.div_monomial(&mb).unwrap();
    let g = gcd_no_monomial(&a1, &b1);
    g.mul_monomial(&mono, &g.leading_coeff().inv().unwrap())
}

fn gcd_no_monomial(a: &Poly, b: &Poly) -> Poly {
    let space = a.space();
    if a.is_constant() || b.is_constant() {
        return Poly::one(space);
    }
    if a == b {
        return a.monic();
    }
    let nvars = space.nvars();
    // A variable present in only one argument can be eliminated through
    // that argument's content.
    for v in 0..nvars {
        match (a.uses_var(v), b.uses_var(v)) {
            (true, false) => return gcd(&content(a, v), b),
            (false, true) => return gcd(a, &content(b, v)),
            _ => {}
        }
    }
    let v = (0..nvars)
        .filter(|&v| a.uses_var(v))
        .min_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))
        .expect("nonconstant polynomials use some variable");

    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");

    let (mut r0, mut r1) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&r0, &r1, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            return c;
        }
        r0 = r1;
        r1 = primitive_part(&r, v);
    }
    let g = &c * &primitive_part(&r1, v);
    g.monic()
}

/// GCD of the coefficients of `p` viewed as a polynomial in `v`.
pub(crate) fn content(p: &Poly, v: usize) -> Poly {
    let coeffs = p.to_univariate(v);
    let mut g = Poly::zero(p.space());
    for c in coeffs.iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_constant() {
            return Poly::one(p.space());
        }
    }
    g
}

fn primitive_part(p: &Poly, v: usize) -> Poly {
    let c = content(p, v);
    p.exact_div(&c).expect("content divides").monic()
}

/// Pseudo-remainder of `a` by `b` in `v`, up to a factor that is free of `v`.
fn pseudo_rem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let db = b.degree_in(v);
    let coeffs = b.to_univariate(v);
    let lc = coeffs[db as usize].clone();
    let space = a.space();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let c = r.to_univariate(v).swap_remove(dr as usize);
        let shift = crate::poly::Monomial::var(space.nvars(), v, dr - db);
        let t = b.mul_monomial(&shift, &crate::GaussRat::from_i64(1));
        r = &(&r * &lc) - &(&c * &t);
    }
    r
}

/// Least common multiple, monic.
pub fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero(a.space());
    }
    let g = gcd(a, b);
    (&a.exact_div(&g).expect("gcd divides") * b).monic()
}

/// Square-free part: `p / gcd(p, ∂p/∂x₁, …)`, monic.
pub fn squarefree_part(p: &Poly) -> Poly {
    if p.is_constant() {
        return Poly::one(p.space());
    }
    let mut g = p.clone();
    for v in 0..p.space().nvars() {
        if p.uses_var(v) {
            g = gcd(&g, &p.derivative(v));
        }
    }
    p.exact_div(&g).expect("gcd divides").monic()
}

/// Refine a list of polynomials into pairwise coprime, square-free,
/// nonconstant monic factors whose product has the same zero set as the
/// product of the inputs.
pub fn coprime_base(polys: &[Poly]) -> Vec<Poly> {
    let mut pending: Vec<Poly> = Vec::new();
    for p in polys {
        if p.is_zero() || p.is_constant() {
            continue;
        }
        // split variables out first
        let m = p.monomial_content();
        for (v, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                pending.push(Poly::var(p.space(), v));
            }
        }
        let rest = p.div_monomial(&m).unwrap();
        if !rest.is_constant() {
            pending.push(squarefree_part(&rest));
        }
    }
    let mut base: Vec<Poly> = Vec::new();
    while let Some(p) = pending.pop() {
        let p = p.monic();
        if p.is_constant() {
            continue;
        }
        let mut split = false;
        for i in 0..base.len() {
            let g = gcd(&base[i], &p);
            if g.is_constant() {
                continue;
            }
            let b = base.swap_remove(i);
            let b_rest = b.exact_div(&g).unwrap();
            let p_rest = p.exact_div(&g).unwrap();
            for q in [g, b_rest, p_rest] {
                if !q.is_constant() {
                    pending.push(q);
                }
            }
            split = true;
            break;
        }
        if !split {
            base.push(p);
        }
    }
    base.sort_by_cached_key(|p| p.to_string());
    base.dedup();
    base
}
