//! Brute-force enumeration of linear factors, as an oracle for
//! `common_real_factor` on polynomials in `z, z̄` of total degree at most 3
//! with coefficients in `{0, ±1, ±i}`.

use lfk_core::mirror::{common_real_factor, is_real};
use lfk_core::{GaussRat, Monomial, Poly, VarSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Gaussian integer `re + i·im`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct G(i64, i64);

impl G {
    const ZERO: G = G(0, 0);
    const ONE: G = G(1, 0);
    const UNITS: [G; 4] = [G(1, 0), G(0, 1), G(-1, 0), G(0, -1)];

    fn add(self, o: G) -> G {
        G(self.0 + o.0, self.1 + o.1)
    }
    fn mul(self, o: G) -> G {
        G(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn neg(self) -> G {
        G(-self.0, -self.1)
    }
    fn conj(self) -> G {
        G(self.0, -self.1)
    }
    fn norm(self) -> i64 {
        self.0 * self.0 + self.1 * self.1
    }
    fn is_zero(self) -> bool {
        self == G::ZERO
    }
    fn pow(self, k: usize) -> G {
        (0..k).fold(G::ONE, |acc, _| acc.mul(self))
    }
}

/// Degree of the sampled polynomials.
const DEG: usize = 3;
/// Degree capacity of [`Dense`], enough for a sample times a linear form.
const CAP: usize = DEG + 1;

/// Dense polynomial in `x = z`, `y = z̄`; entry `[i][j]` is the coefficient
/// of `x^i y^j`, with `i + j ≤ CAP`.
type Dense = [[G; CAP + 1]; CAP + 1];

const ZERO: Dense = [[G::ZERO; CAP + 1]; CAP + 1];

fn monomials_upto(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=d).flat_map(move |i| (0..=d - i).map(move |j| (i, j)))
}

fn monomials() -> impl Iterator<Item = (usize, usize)> {
    monomials_upto(CAP)
}

fn degree(p: &Dense) -> Option<usize> {
    monomials().filter(|&(i, j)| !p[i][j].is_zero()).map(|(i, j)| i + j).max()
}

/// `conj(p(z, z̄))`: conjugate coefficients and swap exponents.
fn bar(p: &Dense) -> Dense {
    let mut q = ZERO;
    for (i, j) in monomials() {
        q[j][i] = p[i][j].conj();
    }
    q
}

/// `p = u·q` for some nonzero complex `u`.
fn parallel(p: &[G], q: &[G]) -> bool {
    let Some(k) = p.iter().position(|c| !c.is_zero()) else {
        return q.iter().all(|c| c.is_zero());
    };
    if q[k].is_zero() {
        return false;
    }
    p.iter().zip(q).all(|(&a, &b)| a.mul(q[k]) == b.mul(p[k]))
}

fn flat(p: &Dense) -> Vec<G> {
    monomials().map(|(i, j)| p[i][j]).collect()
}

/// Linear form `a + b·x + c·y`.
#[derive(Clone, Copy, Debug)]
struct Lin {
    a: G,
    b: G,
    c: G,
}

impl Lin {
    fn bar(self) -> Lin {
        Lin {
            a: self.a.conj(),
            b: self.c.conj(),
            c: self.b.conj(),
        }
    }

    fn is_real(self) -> bool {
        parallel(&[self.a, self.b, self.c], &[self.bar().a, self.bar().b, self.bar().c])
    }

    /// Does `self` divide `p`? `p` is restricted to the line `self = 0` and
    /// the restriction is cleared of denominators.
    fn divides(self, p: &Dense) -> bool {
        let Lin { a, b, c } = self;
        if !c.is_zero() {
            // y = −(a + b x)/c; coefficient of x^k in Σ p_ij x^i (−a − b x)^j c^(CAP−j)
            let mut out = [G::ZERO; CAP + 1];
            for (i, j) in monomials() {
                if p[i][j].is_zero() {
                    continue;
                }
                let base = p[i][j].mul(c.pow(CAP - j));
                for t in 0..=j {
                    let term = base
                        .mul(G(binom(j, t), 0))
                        .mul(a.neg().pow(j - t))
                        .mul(b.neg().pow(t));
                    out[i + t] = out[i + t].add(term);
                }
            }
            out.iter().all(|g| g.is_zero())
        } else {
            // x = −a/b
            let mut out = [G::ZERO; CAP + 1];
            for (i, j) in monomials() {
                let term = p[i][j].mul(a.neg().pow(i)).mul(b.pow(CAP - i));
                out[j] = out[j].add(term);
            }
            out.iter().all(|g| g.is_zero())
        }
    }

    fn times(self, p: &Dense) -> Dense {
        assert!(degree(p).unwrap_or(0) < CAP);
        let mut q = ZERO;
        for (i, j) in monomials_upto(CAP - 1) {
            q[i][j] = q[i][j].add(p[i][j].mul(self.a));
            q[i + 1][j] = q[i + 1][j].add(p[i][j].mul(self.b));
            q[i][j + 1] = q[i][j + 1].add(p[i][j].mul(self.c));
        }
        q
    }
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
}

/// Gaussian integers of norm at most 10, the Mahler-measure bound on the
/// coefficients of a linear factor of a polynomial with at most ten unit
/// coefficients.
fn small_gaussians() -> Vec<G> {
    let mut v = Vec::new();
    for re in -3..=3 {
        for im in -3..=3 {
            let g = G(re, im);
            if g.norm() <= 10 {
                v.push(g);
            }
        }
    }
    v
}

/// Primitive linear forms up to units: the leading nonzero entry of
/// `(c, b, a)` has positive real part and nonnegative imaginary part.
fn candidates() -> Vec<Lin> {
    let gs = small_gaussians();
    let normalized = |g: G| g.0 > 0 && g.1 >= 0;
    let mut out = Vec::new();
    for &a in &gs {
        for &b in &gs {
            for &c in &gs {
                let lead = if !c.is_zero() {
                    c
                } else if !b.is_zero() {
                    b
                } else {
                    continue;
                };
                if normalized(lead) {
                    out.push(Lin { a, b, c });
                }
            }
        }
    }
    out
}

/// Whether `p` has a nonconstant factor fixed by conjugation up to a unit.
///
/// For degree at most 3 such a factor is either `p` itself, a real linear
/// factor, a conjugate pair `ℓ ℓ̄`, or the cofactor of a linear factor `ℓ`.
fn oracle(p: &Dense, cands: &[Lin]) -> bool {
    let Some(deg) = degree(p) else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    let pb = bar(p);
    if parallel(&flat(p), &flat(&pb)) {
        return true;
    }
    cands.iter().filter(|l| l.divides(p)).any(|&l| {
        l.is_real()
            || l.bar().divides(p)
            || (deg >= 2 && parallel(&flat(&l.times(&pb)), &flat(&l.bar().times(p))))
    })
}

fn to_poly(p: &Dense) -> Poly {
    let space = VarSpace::real(1);
    Poly::from_terms(
        space,
        monomials().filter(|&(i, j)| !p[i][j].is_zero()).map(|(i, j)| {
            let c = p[i][j];
            (Monomial::from_exps(vec![i as u32, j as u32]), GaussRat::from_parts(c.0, c.1))
        }),
    )
}

const COEFFS: [G; 5] = [G(0, 0), G(1, 0), G(-1, 0), G(0, 1), G(0, -1)];

fn in_range(p: &Dense) -> bool {
    degree(p).is_some_and(|d| d <= DEG) && monomials().all(|(i, j)| COEFFS.contains(&p[i][j]))
}

fn random_dense(rng: &mut ChaCha8Rng) -> Dense {
    let density = rng.gen_range(1..=10);
    let mut p = ZERO;
    for (i, j) in monomials_upto(DEG) {
        if rng.gen_range(0..10) < density {
            p[i][j] = COEFFS[rng.gen_range(1..5)];
        }
    }
    p
}

fn random_lin(rng: &mut ChaCha8Rng) -> Lin {
    let mut pick = || COEFFS[rng.gen_range(0..5)];
    Lin {
        a: pick(),
        b: pick(),
        c: pick(),
    }
}

/// Products of small linear forms, which carry real factors far more often
/// than uniform samples do.
fn structured_dense(rng: &mut ChaCha8Rng) -> Dense {
    let mut p = ZERO;
    p[0][0] = G::UNITS[rng.gen_range(0..4)];
    let first = random_lin(rng);
    p = first.times(&p);
    match rng.gen_range(0..3) {
        0 => p = first.bar().times(&p),
        1 => {
            let mut r = random_lin(rng);
            r.c = r.b.conj();
            r.a = G(r.a.0, 0);
            p = r.times(&p);
        }
        _ => {}
    }
    if degree(&p).unwrap_or(0) < DEG && rng.gen_bool(0.5) {
        p = random_lin(rng).times(&p);
    }
    p
}

/// Hand-checked instances of the oracle itself.
pub fn self_check() {
    let cands = candidates();
    let x = Lin { a: G::ZERO, b: G::ONE, c: G::ZERO };
    let mut one = ZERO;
    one[0][0] = G::ONE;
    // z z̄ − 1 is real; (1 + i z) is not
    let mut p = one;
    p[1][1] = G::ONE;
    p[0][0] = G(-1, 0);
    assert!(oracle(&p, &cands));
    let q = Lin { a: G::ONE, b: G(0, 1), c: G::ZERO }.times(&one);
    assert!(!oracle(&q, &cands));
    // z + i z̄ is real up to a unit; z(1 + z̄) has no real factor
    assert!(oracle(&Lin { a: G::ZERO, b: G::ONE, c: G(0, 1) }.times(&one), &cands));
    let r = x.times(&Lin { a: G::ONE, b: G::ZERO, c: G::ONE }.times(&one));
    assert!(!oracle(&r, &cands));
    // z·z̄·(1 + i z)
    let s = x.times(&x.bar().times(&q));
    assert!(oracle(&s, &cands));
    assert!(x.divides(&s) && x.bar().divides(&s) && !x.divides(&q));
}

pub struct Agreement {
    pub samples: usize,
    pub positives: usize,
}

/// Compare on 400 uniform and 300 structured seeded samples.
pub fn agreement() -> Result<Agreement, String> {
    let cands = candidates();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0bac1e);
    let mut samples = Vec::new();
    while samples.len() < 400 {
        let p = random_dense(&mut rng);
        if degree(&p).is_some() {
            samples.push(p);
        }
    }
    while samples.len() < 700 {
        let p = structured_dense(&mut rng);
        if in_range(&p) {
            samples.push(p);
        }
    }

    let mut positives = 0;
    for p in &samples {
        let expected = oracle(p, &cands);
        let poly = to_poly(p);
        let got = common_real_factor(&poly).unwrap();
        if got.is_some() != expected {
            return Err(format!("disagreement on {}: oracle {}, common_real_factor {:?}", poly, expected, got));
        }
        if let Some(r) = got {
            positives += 1;
            let ok = r.total_degree() >= 1 && is_real(&r).unwrap().symmetric && poly.exact_div(&r).is_ok();
            if !ok {
                return Err(format!("{} is not a nonconstant real factor of {}", r, poly));
            }
        }
    }
    Ok(Agreement {
        samples: samples.len(),
        positives,
    })
}
