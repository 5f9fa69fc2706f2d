// SPDX-License-Identifier: Apache-2.0

//! Built-in examples: the ELA on 2x2 matrices, a pair of ELAs with the same
//! Lie 2-algebra, the five classification representatives over the abelian
//! plane, and the reduction of their binary quadratic forms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ela::{ElaMorphism, ELA};
use crate::error::{invalid, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::matrix::ints;
use crate::linalg::{BilinearMap, Matrix, Rational, Subspace, Vector};
use crate::structure::{DCochain2, Decomposition};

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// `V = End(R²)` with coordinates `(x11, x12, x21, x22)`,
/// `[X, Y] = P(X)Y - YP(X)` for `P` the projection onto the `x11` entry,
/// `W = R³`, `t(a, b, c) = ½ [[0, a], [b, 0]]` and
/// `X∘Y = (x11 y12 + x12 y11, -x11 y21 - x21 y11, x22 y22)`.
pub fn example_end2() -> ELA {
    let bracket = BilinearMap::from_bilinear_fn(4, 4, 4, |x, y| {
        vec![
            Rational::zero(),
            &x[0] * &y[1],
            -(&x[0] * &y[2]),
            Rational::zero(),
        ]
    });
    let algebra = LeibnizAlgebra::new(bracket).expect("shape is fixed");
    let half = Rational::half();
    let z = Rational::zero();
    let t = Matrix::from_rows(
        3,
        vec![
            vec![z.clone(), z.clone(), z.clone()],
            vec![half.clone(), z.clone(), z.clone()],
            vec![z.clone(), half, z.clone()],
            vec![z.clone(), z.clone(), z],
        ],
    );
    let circ = BilinearMap::from_bilinear_fn(4, 4, 3, |x, y| {
        vec![
            &x[0] * &y[1] + &x[1] * &y[0],
            -(&x[0] * &y[2]) - &x[2] * &y[0],
            &x[3] * &y[3],
        ]
    });
    ELA::new(algebra, t, circ).expect("shape is fixed")
}

/// Two ELAs on the inclusion `span{y} -> span{x, y}`: the first with
/// `[x, x] = y` and `x∘x = y`, the second with everything zero.
pub fn example_ela_pair() -> (ELA, ELA) {
    let bracket = BilinearMap::from_basis_fn(2, 2, 2, |i, j| {
        if (i, j) == (0, 0) {
            ints(&[0, 1])
        } else {
            ints(&[0, 0])
        }
    });
    let circ = BilinearMap::from_basis_fn(2, 2, 1, |i, j| {
        if (i, j) == (0, 0) {
            ints(&[1])
        } else {
            ints(&[0])
        }
    });
    let t = Matrix::from_ints(&[&[0], &[1]]);
    let first = ELA::new(LeibnizAlgebra::new(bracket).expect("shape is fixed"), t.clone(), circ)
        .expect("shape is fixed");
    let second = ELA::new(
        LeibnizAlgebra::abelian(2),
        t,
        BilinearMap::zeros(2, 2, 1),
    )
    .expect("shape is fixed");
    (first, second)
}

/// The `(ε1, ε2, ε3)` of the five classification representatives.
pub const REPRESENTATIVE_EPSILONS: [[i64; 3]; 5] =
    [[1, 0, 0], [0, 1, 0], [1, 1, 0], [-1, 1, 0], [0, 0, 1]];

/// The `(a, b, x, y)` bracket `[(a,b,x,y),(a',b',x',y')] = (xa', -xb', 0, 0)`.
pub fn plane_action_algebra() -> LeibnizAlgebra {
    let bracket = BilinearMap::from_bilinear_fn(4, 4, 4, |u, v| {
        vec![&u[2] * &v[0], -(&u[2] * &v[1]), Rational::zero(), Rational::zero()]
    });
    LeibnizAlgebra::new(bracket).expect("shape is fixed")
}

/// Representative `k` in `1..=5`: `V = R⁴` with coordinates `(a, b, x, y)`,
/// `t(a, b, c) = (a, b, 0, 0)`, the bracket of [`plane_action_algebra`] and
/// `v∘v = (xa, -xb, ε1 x² + ε2 y² + ε3 xy)`.
pub fn classification_representative(k: usize) -> Result<ELA> {
    if !(1..=5).contains(&k) {
        return Err(invalid(format!("representative index {k} is outside 1..=5")));
    }
    let [e1, e2, e3] = REPRESENTATIVE_EPSILONS[k - 1];
    let q = QuadraticFormTwoVars::from_epsilons(e1, e2, e3);
    let half = Rational::half();
    let circ = BilinearMap::from_bilinear_fn(4, 4, 3, |u, v| {
        let a = &half * (&u[2] * &v[0] + &v[2] * &u[0]);
        let b = -(&half * (&u[2] * &v[1] + &v[2] * &u[1]));
        (vec![a, b]).into_iter().chain(q.polar(&u[2..], &v[2..])).collect()
    });
    let t = Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
    ELA::new(plane_action_algebra(), t, circ)
}

/// Looks up a corpus item by name: `end2`, `ela1`, `ela2`, `class-1` to
/// `class-5`.
pub fn by_name(name: &str) -> Option<ELA> {
    match name {
        "end2" => Some(example_end2()),
        "ela1" => Some(example_ela_pair().0),
        "ela2" => Some(example_ela_pair().1),
        _ => {
            let k: usize = name.strip_prefix("class-")?.parse().ok()?;
            classification_representative(k).ok()
        }
    }
}

pub const CORPUS_NAMES: [&str; 8] = [
    "end2", "ela1", "ela2", "class-1", "class-2", "class-3", "class-4", "class-5",
];

pub const PERTURBED_AXIOMS: [&str; 5] = ["leibniz", "a", "b", "c", "d"];

/// A modification of [`example_end2`] that violates exactly one axiom:
/// - `d`: `t` doubled;
/// - `c`: `(x22 y12 + x12 y22) e3` added to the product;
/// - `b`: a fourth `W` direction with `t(e4) = E22`;
/// - `a`: a sum with the 2-dimensional nonabelian Lie algebra `[g0, g1] = g1`
///   and one more `W` direction sent to `g0`, product zero;
/// - `leibniz`: a sum with the antisymmetric bracket `[f0, f1] = f2`,
///   `[f1, f2] = f1` (not Jacobi), no new `W` directions.
pub fn perturbed_end2(axiom: &str) -> Option<ELA> {
    let e = example_end2();
    match axiom {
        "d" => e.with_t(e.t().scale(&Rational::from_int(2))).ok(),
        "c" => {
            let extra = BilinearMap::from_bilinear_fn(4, 4, 3, |x, y| {
                vec![Rational::zero(), Rational::zero(), &x[3] * &y[1] + &x[1] * &y[3]]
            });
            e.with_circ(e.circ().add(&extra)).ok()
        }
        "b" => {
            let t = e.t().hstack(&Matrix::from_ints(&[&[0], &[0], &[0], &[1]]));
            let circ = BilinearMap::from_basis_fn(4, 4, 4, |i, j| {
                let mut v = e.circ().basis_value(i, j);
                v.push(Rational::zero());
                v
            });
            ELA::new(e.algebra().clone(), t, circ).ok()
        }
        "a" => {
            let lie = BilinearMap::from_basis_fn(2, 2, 2, |i, j| match (i, j) {
                (0, 1) => ints(&[0, 1]),
                (1, 0) => ints(&[0, -1]),
                _ => ints(&[0, 0]),
            });
            let block = ELA::new(
                LeibnizAlgebra::new(lie).ok()?,
                Matrix::from_ints(&[&[1], &[0]]),
                BilinearMap::zeros(2, 2, 1),
            )
            .ok()?;
            Some(e.direct_sum(&block))
        }
        "leibniz" => {
            let br = BilinearMap::from_basis_fn(3, 3, 3, |i, j| match (i, j) {
                (0, 1) => ints(&[0, 0, 1]),
                (1, 0) => ints(&[0, 0, -1]),
                (1, 2) => ints(&[0, 1, 0]),
                (2, 1) => ints(&[0, -1, 0]),
                _ => ints(&[0, 0, 0]),
            });
            let block =
                ELA::new(LeibnizAlgebra::new(br).ok()?, Matrix::zeros(3, 0), BilinearMap::zeros(3, 3, 0))
                    .ok()?;
            Some(e.direct_sum(&block))
        }
        _ => None,
    }
}

/// The decomposition data `g = R²` abelian acting on `i = R²` by
/// `(x, y)·(a, b) = (xa, -xb)`, `U = R`, `α = 0`, `Δ_mix = 0`,
/// `Δ_g = y²`, together with the isomorphism from its reconstruction to
/// [`example_end2`]: `ψ(a, b, x, y) = [[x, a], [b, y]]`,
/// `φ(c, a, b) = (2a, 2b, c)`.
pub fn example_a1_isomorphism() -> (Decomposition, ElaMorphism) {
    let algebra = plane_action_algebra();
    let ideal = Subspace::span(4, &[ints(&[1, 0, 0, 0]), ints(&[0, 1, 0, 0])]);
    let delta = BilinearMap::from_basis_fn(4, 4, 1, |i, j| {
        if (i, j) == (3, 3) {
            ints(&[1])
        } else {
            ints(&[0])
        }
    });
    let delta = DCochain2::new(delta).expect("symmetric by construction");
    let d = Decomposition::from_parts(algebra, ideal, delta).expect("valid atoms");
    let psi = Matrix::from_ints(&[&[0, 0, 1, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    let phi = Matrix::from_ints(&[&[0, 2, 0], &[0, 0, 2], &[1, 0, 0]]);
    (d, ElaMorphism::plain(phi, psi))
}

/// `μ1 x² + μ2 y² + 2 μ3 xy`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticFormTwoVars {
    pub mu1: Rational,
    pub mu2: Rational,
    pub mu3: Rational,
}

impl QuadraticFormTwoVars {
    pub fn new(mu1: Rational, mu2: Rational, mu3: Rational) -> Self {
        QuadraticFormTwoVars { mu1, mu2, mu3 }
    }

    /// `ε1 x² + ε2 y² + ε3 xy`.
    pub fn from_epsilons(e1: i64, e2: i64, e3: i64) -> Self {
        QuadraticFormTwoVars::new(Rational::from_int(e1), Rational::from_int(e2), r(e3, 2))
    }

    pub fn zero() -> Self {
        QuadraticFormTwoVars::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.mu1.is_zero() && self.mu2.is_zero() && self.mu3.is_zero()
    }

    /// Value on `(x, y)`.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        &self.mu1 * x * x + &self.mu2 * y * y + Rational::from_int(2) * &self.mu3 * x * y
    }

    /// The symmetric bilinear form as a one-component vector.
    pub fn polar(&self, u: &[Rational], v: &[Rational]) -> Vector {
        vec![&self.mu1 * &u[0] * &v[0] + &self.mu2 * &u[1] * &v[1] + &self.mu3 * (&u[0] * &v[1] + &u[1] * &v[0])]
    }

    /// The form read off a bilinear map `R² x R² -> R`.
    pub fn from_bilinear(b: &BilinearMap) -> Result<Self> {
        if b.dims() != (2, 2, 1) {
            return Err(invalid("expected a scalar bilinear form on a plane"));
        }
        if !b.is_symmetric() {
            return Err(invalid("bilinear form is not symmetric"));
        }
        Ok(QuadraticFormTwoVars::new(
            b.get(0, 0, 0).clone(),
            b.get(0, 1, 1).clone(),
            b.get(0, 0, 1).clone(),
        ))
    }

    pub fn to_bilinear(&self) -> BilinearMap {
        BilinearMap::from_bilinear_fn(2, 2, 1, |u, v| self.polar(u, v))
    }

    /// `μ1 μ2 - μ3²`.
    pub fn determinant(&self) -> Rational {
        &self.mu1 * &self.mu2 - &self.mu3 * &self.mu3
    }
}

impl fmt::Display for QuadraticFormTwoVars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x^2 + {} y^2 + 2*({}) xy", self.mu1, self.mu2, self.mu3)
    }
}

/// `q'(x, y) = a q(x, (y - c x) / b)`.
pub fn delta_g_action(
    q: &QuadraticFormTwoVars,
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<QuadraticFormTwoVars> {
    if a.is_zero() || b.is_zero() {
        return Err(invalid("the scalings A and B must be nonzero"));
    }
    let bi = b.recip().expect("nonzero");
    let bi2 = &bi * &bi;
    let two = Rational::from_int(2);
    let mu1 = &q.mu1 + &q.mu2 * c * c * &bi2 - &two * &q.mu3 * c * &bi;
    let mu2 = &q.mu2 * &bi2;
    let mu3 = &q.mu3 * &bi - &q.mu2 * c * &bi2;
    Ok(QuadraticFormTwoVars::new(a * mu1, a * mu2, a * mu3))
}

/// The orbit of a form under [`delta_g_action`] over the reals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DeltaClass {
    #[serde(rename = "zero")]
    Zero,
    #[serde(rename = "(1,0,0)")]
    XSquared,
    #[serde(rename = "(0,1,0)")]
    YSquared,
    #[serde(rename = "(1,1,0)")]
    Definite,
    #[serde(rename = "(-1,1,0)")]
    Indefinite,
    #[serde(rename = "(0,0,1)")]
    Mixed,
}

impl DeltaClass {
    pub const ALL: [DeltaClass; 6] = [
        DeltaClass::Zero,
        DeltaClass::XSquared,
        DeltaClass::YSquared,
        DeltaClass::Definite,
        DeltaClass::Indefinite,
        DeltaClass::Mixed,
    ];

    /// `(ε1, ε2, ε3)`, `None` for the zero class.
    pub fn epsilons(self) -> Option<[i64; 3]> {
        match self {
            DeltaClass::Zero => None,
            DeltaClass::XSquared => Some([1, 0, 0]),
            DeltaClass::YSquared => Some([0, 1, 0]),
            DeltaClass::Definite => Some([1, 1, 0]),
            DeltaClass::Indefinite => Some([-1, 1, 0]),
            DeltaClass::Mixed => Some([0, 0, 1]),
        }
    }

    pub fn representative(self) -> QuadraticFormTwoVars {
        match self.epsilons() {
            None => QuadraticFormTwoVars::zero(),
            Some([a, b, c]) => QuadraticFormTwoVars::from_epsilons(a, b, c),
        }
    }

    /// Index `k` of the matching classification representative.
    pub fn representative_index(self) -> Option<usize> {
        let e = self.epsilons()?;
        REPRESENTATIVE_EPSILONS.iter().position(|x| *x == e).map(|i| i + 1)
    }
}

impl fmt::Display for DeltaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.epsilons() {
            None => write!(f, "zero"),
            Some([a, b, c]) => write!(f, "({a},{b},{c})"),
        }
    }
}

/// The class of `q`. The action fixes `x` and only rescales `q(0, y)`, so
/// whether `μ2` vanishes is invariant; when it does not, the sign of the
/// determinant separates the three classes with a `y²` term.
pub fn canonical_delta_class(q: &QuadraticFormTwoVars) -> DeltaClass {
    if q.is_zero() {
        return DeltaClass::Zero;
    }
    if q.mu2.is_zero() {
        return if q.mu3.is_zero() {
            DeltaClass::XSquared
        } else {
            DeltaClass::Mixed
        };
    }
    match q.determinant().signum() {
        0 => DeltaClass::YSquared,
        1 => DeltaClass::Definite,
        _ => DeltaClass::Indefinite,
    }
}

/// Parameters `(A, B, C)` taking `q` exactly to its class representative,
/// when rational ones exist. The zero form gives `(1, 1, 0)`.
pub fn normalizing_parameters(q: &QuadraticFormTwoVars) -> Option<(Rational, Rational, Rational)> {
    let one = Rational::one();
    let zero = Rational::zero();
    if q.is_zero() {
        return Some((one.clone(), one, zero));
    }
    if q.mu2.is_zero() {
        if q.mu3.is_zero() {
            return Some((q.mu1.recip()?, one, zero));
        }
        // kill x² with C, then scale xy to ½·2
        let a = (Rational::from_int(2) * &q.mu3).recip()?;
        let c = &q.mu1 / (Rational::from_int(2) * &q.mu3);
        return Some((a, one, c));
    }
    // C removes the cross term, leaving D x² + (μ2/B²) y².
    let d = &q.mu1 - &q.mu3 * &q.mu3 / &q.mu2;
    if d.is_zero() {
        let c = &q.mu3 / &q.mu2;
        return Some((q.mu2.recip()?, one, c));
    }
    let b = (&q.mu2 / &d).abs().sqrt_exact()?;
    let a = &b * &b / &q.mu2;
    let c = &q.mu3 * &b / &q.mu2;
    Some((a, b, c))
}
