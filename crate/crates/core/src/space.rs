//! Variable spaces: which coordinates a polynomial or form is written in.

use std::fmt;

use serde::Serialize;

/// The role of the second variable block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    /// `(z, z̄)`: real-analytic data on ℂⁿ.
    RealPaired,
    /// `(z, w)`: holomorphic data on ℂⁿ × ℂⁿ*.
    Complexified,
}

/// `n` complex coordinates plus a second block of `n` (conjugates or mirror
/// coordinates). Variable `k < n` is `z_k`, variable `n + k` its partner.
///
/// `base` only affects labels: homogeneous coordinates are numbered from 0,
/// affine ones from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VarSpace {
    pub n: usize,
    pub flavor: Flavor,
    pub base: usize,
}

impl VarSpace {
    pub fn new(n: usize, flavor: Flavor) -> Self {
        assert!(n > 0, "a variable space needs at least one coordinate");
        VarSpace { n, flavor, base: 1 }
    }

    pub fn real(n: usize) -> Self {
        VarSpace::new(n, Flavor::RealPaired)
    }

    pub fn complexified(n: usize) -> Self {
        VarSpace::new(n, Flavor::Complexified)
    }

    /// Homogeneous coordinates `z_0..z_{n-1}`.
    pub fn homogeneous(n: usize, flavor: Flavor) -> Self {
        VarSpace { n, flavor, base: 0 }
    }

    pub fn nvars(&self) -> usize {
        2 * self.n
    }

    pub fn with_flavor(self, flavor: Flavor) -> Self {
        VarSpace { flavor, ..self }
    }

    /// Index of the partner variable in the other block.
    pub fn partner(&self, var: usize) -> usize {
        if var < self.n {
            var + self.n
        } else {
            var - self.n
        }
    }

    pub fn is_first_block(&self, var: usize) -> bool {
        var < self.n
    }

    /// Printed name of variable `var` (`z1`, `zb1`, `w1`).
    pub fn var_name(&self, var: usize) -> String {
        let (prefix, k) = self.split(var);
        format!("{}{}", prefix, k)
    }

    /// Printed name of the basis differential `d(var)`.
    pub fn diff_name(&self, var: usize) -> String {
        format!("d{}", self.var_name(var))
    }

    fn split(&self, var: usize) -> (&'static str, usize) {
        if var < self.n {
            ("z", var + self.base)
        } else {
            let prefix = match self.flavor {
                Flavor::RealPaired => "zb",
                Flavor::Complexified => "w",
            };
            (prefix, var - self.n + self.base)
        }
    }
}

impl fmt::Display for VarSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flavor = match self.flavor {
            Flavor::RealPaired => "real",
            Flavor::Complexified => "complexified",
        };
        write!(f, "{}(n={}, base={})", flavor, self.n, self.base)
    }
}
