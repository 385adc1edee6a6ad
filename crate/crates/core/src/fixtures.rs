//! Four worked `n = 3` inverse systems with their published `T`, `Q`, `δ`,
//! `b1` and `b2`, transcribed entry for entry.
//!
//! `b1` entries that were printed in factored form are kept as sums of
//! products `(a, b)` meaning `a * b`, so the transcription stays literal.

use num_rational::BigRational;

use crate::divpow::InverseSystem;
use crate::error::Result;
use crate::matrix::PolyMatrix;
use crate::poly::{Monomial, Polynomial, Ring};
use crate::resolution::{build_resolution, ResolutionComplex};

pub struct Fixture {
    pub name: &'static str,
    /// `(exponents of m, coefficient of m*)`.
    pub phi: &'static [([u16; 3], i64)],
    pub t: [[i64; 6]; 6],
    pub q: [[i64; 6]; 6],
    pub delta: i64,
    pub b1: [&'static [(&'static str, &'static str)]; 7],
    pub b2: [[&'static str; 7]; 7],
}

impl Fixture {
    pub fn inverse_system(&self) -> InverseSystem {
        let coeffs: Vec<(Monomial, BigRational)> = self
            .phi
            .iter()
            .map(|&([a, b, c], v)| (Monomial::new(a, b, c), BigRational::from_integer(v.into())))
            .collect();
        InverseSystem::from_coefficients(3, &coeffs).expect("fixture inverse system")
    }

    pub fn t_matrix(&self) -> PolyMatrix {
        int_matrix(&self.t)
    }

    pub fn q_matrix(&self) -> PolyMatrix {
        int_matrix(&self.q)
    }

    pub fn b1_values(&self) -> Vec<Polynomial> {
        self.b1
            .iter()
            .map(|products| {
                products
                    .iter()
                    .fold(Polynomial::zero(Ring::Specialized), |acc, (a, b)| {
                        &acc + &(&rational(a) * &rational(b))
                    })
            })
            .collect()
    }

    pub fn b2_values(&self) -> Vec<Vec<Polynomial>> {
        self.b2
            .iter()
            .map(|row| row.iter().map(|s| rational(s)).collect())
            .collect()
    }

    /// Builds the complex and lists every entry that differs from the transcription.
    pub fn compare(&self) -> Result<FixtureComparison> {
        let res = build_resolution(&self.inverse_system())?;
        Ok(self.compare_with(&res))
    }

    pub fn compare_with(&self, res: &ResolutionComplex) -> FixtureComparison {
        let mut mismatches = Vec::new();
        let cat = res.catalecticant();
        let mut check = |what: String, got: &Polynomial, want: &Polynomial| {
            if got != want {
                mismatches.push(format!("{what}: computed {got}, expected {want}"));
            }
        };
        let (t, q) = (self.t_matrix(), self.q_matrix());
        for i in 0..6 {
            for j in 0..6 {
                check(format!("T[{i}][{j}]"), cat.t().get(i, j), t.get(i, j));
                check(format!("Q[{i}][{j}]"), cat.q().get(i, j), q.get(i, j));
            }
        }
        check(
            "delta".into(),
            res.delta(),
            &Polynomial::from_int(Ring::Specialized, self.delta),
        );
        for (j, want) in self.b1_values().iter().enumerate() {
            check(
                format!("b1[{}]", res.b1().col_labels()[j]),
                res.b1().get(0, j),
                want,
            );
        }
        for (i, row) in self.b2_values().iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                check(format!("b2[{i}][{j}]"), res.b2().get(i, j), want);
            }
        }
        FixtureComparison {
            name: self.name,
            mismatches,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FixtureComparison {
    pub name: &'static str,
    pub mismatches: Vec<String>,
}

impl FixtureComparison {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn rational(s: &str) -> Polynomial {
    Polynomial::parse(s, Ring::Specialized).expect("fixture polynomial")
}

fn int_matrix(values: &[[i64; 6]; 6]) -> PolyMatrix {
    let rows: Vec<Vec<i64>> = values.iter().map(|r| r.to_vec()).collect();
    PolyMatrix::from_ints(Ring::Specialized, &rows)
}

pub fn all() -> [&'static Fixture; 4] {
    [&EXAMPLE_0, &EXAMPLE_1, &EXAMPLE_2, &EXAMPLE_3]
}

pub static EXAMPLE_0: Fixture = Fixture {
    name: "example-0",
    phi: &[
        ([2, 2, 0], 1),
        ([1, 1, 2], -1),
        ([0, 0, 4], 2),
        ([4, 0, 0], 1),
        ([0, 4, 0], 2),
    ],
    t: [
        [1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 0, -1],
        [0, 0, 0, 0, -1, 0],
        [1, 0, 0, 2, 0, 0],
        [0, 0, -1, 0, 0, 0],
        [0, -1, 0, 0, 0, 2],
    ],
    q: [
        [-2, 0, 0, 1, 0, 0],
        [0, -2, 0, 0, 0, -1],
        [0, 0, 0, 0, 1, 0],
        [1, 0, 0, -1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, -1, 0, 0, 0, -1],
    ],
    delta: -1,
    b1: [
        &[("x^3 - x*y^2", "1")],
        &[("x^2*z", "1")],
        &[("-x^2*y - x*z^2", "1")],
        &[("-y^3 + 4*x^2*y + 2*x*z^2", "1")],
        &[("-y^2*z", "1")],
        &[("-y*z^2 - 2*x^3 + x*y^2", "1")],
        &[("-z^3 - 2*x*y*z", "1")],
    ],
    b2: [
        ["0", "0", "0", "-z", "y", "0", "-2*x"],
        ["0", "0", "2*x", "x", "-z", "y", "0"],
        ["0", "-2*x", "0", "0", "-3*x", "-z", "y"],
        ["z", "-x", "0", "0", "-x", "0", "0"],
        ["-y", "z", "3*x", "x", "0", "0", "0"],
        ["0", "-y", "z", "0", "0", "0", "-x"],
        ["2*x", "0", "-y", "0", "0", "x", "0"],
    ],
};

pub static EXAMPLE_1: Fixture = Fixture {
    name: "example-1",
    phi: &[
        ([2, 2, 0], 1),
        ([1, 1, 2], -1),
        ([0, 0, 4], 2),
        ([4, 0, 0], 1),
    ],
    t: [
        [1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 0, -1],
        [0, 0, 0, 0, -1, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0],
        [0, -1, 0, 0, 0, 2],
    ],
    q: [
        [0, 0, 0, 1, 0, 0],
        [0, 2, 0, 0, 0, 1],
        [0, 0, 0, 0, -1, 0],
        [1, 0, 0, -1, 0, 0],
        [0, 0, -1, 0, 0, 0],
        [0, 1, 0, 0, 0, 1],
    ],
    delta: 1,
    b1: [
        &[("x^3 - x*y^2", "1")],
        &[("-x^2*z", "1")],
        &[("x^2*y + x*z^2", "1")],
        &[("y^3", "1")],
        &[("y^2*z", "1")],
        &[("y*z^2 + x*y^2", "1")],
        &[("z^3 + 2*x*y*z", "1")],
    ],
    b2: [
        ["0", "0", "0", "z", "-y", "0", "0"],
        ["0", "0", "0", "x", "z", "-y", "0"],
        ["0", "0", "0", "0", "x", "z", "-y"],
        ["-z", "-x", "0", "0", "-x", "0", "0"],
        ["y", "-z", "-x", "x", "0", "0", "0"],
        ["0", "y", "-z", "0", "0", "0", "x"],
        ["0", "0", "y", "0", "0", "-x", "0"],
    ],
};

pub static EXAMPLE_2: Fixture = Fixture {
    name: "example-2",
    phi: &[([2, 2, 0], 1), ([1, 1, 2], -1), ([0, 0, 4], 2)],
    t: [
        [0, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 0, -1],
        [0, 0, 0, 0, -1, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0],
        [0, -1, 0, 0, 0, 2],
    ],
    q: [
        [0, 0, 0, 1, 0, 0],
        [0, 2, 0, 0, 0, 1],
        [0, 0, 0, 0, -1, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0],
        [0, 1, 0, 0, 0, 1],
    ],
    delta: 1,
    b1: [
        &[("x^3", "1")],
        &[("-x^2*z", "1")],
        &[("x^2*y + x*z^2", "1")],
        &[("y^3", "1")],
        &[("y^2*z", "1")],
        &[("y*z^2 + x*y^2", "1")],
        &[("z^3 + 2*x*y*z", "1")],
    ],
    b2: [
        ["0", "0", "0", "z", "-y", "0", "0"],
        ["0", "0", "0", "x", "z", "-y", "0"],
        ["0", "0", "0", "0", "x", "z", "-y"],
        ["-z", "-x", "0", "0", "0", "0", "0"],
        ["y", "-z", "-x", "0", "0", "0", "0"],
        ["0", "y", "-z", "0", "0", "0", "x"],
        ["0", "0", "y", "0", "0", "-x", "0"],
    ],
};

pub static EXAMPLE_3: Fixture = Fixture {
    name: "example-3",
    phi: &[
        ([0, 2, 2], 1),
        ([2, 0, 2], 1),
        ([2, 2, 0], 1),
        ([1, 1, 2], 2),
        ([1, 2, 1], 2),
        ([2, 1, 1], 2),
    ],
    t: [
        [0, 0, 0, 1, 2, 1],
        [0, 1, 2, 0, 2, 2],
        [0, 2, 1, 2, 2, 0],
        [1, 0, 2, 0, 0, 1],
        [2, 2, 2, 0, 1, 0],
        [1, 2, 0, 1, 0, 0],
    ],
    q: [
        [27, -18, -18, 9, 18, 9],
        [-18, 18, 0, -18, 0, 18],
        [-18, 0, 18, 18, 0, -18],
        [9, -18, 18, 27, -18, 9],
        [18, 0, 0, -18, 18, -18],
        [9, 18, -18, 9, -18, 27],
    ],
    delta: 54,
    b1: [
        &[("x", "9*x^2 - 18*x*y + 18*x*z + 27*y^2 - 18*y*z + 9*z^2")],
        &[("x", "18*x^2 - 18*y^2 + 18*y*z - 18*z^2")],
        &[("x", "9*x^2 + 18*x*y - 18*x*z + 9*y^2 - 18*y*z + 27*z^2")],
        &[("54*y^3", "1")],
        &[
            ("54*y^2*z", "1"),
            ("-x", "36*x^2 - 36*x*y - 18*x*z + 36*y^2 + 36*y*z"),
        ],
        &[
            ("54*y*z^2", "1"),
            ("-x", "36*x^2 - 18*x*y - 36*x*z + 36*y*z + 36*z^2"),
        ],
        &[("54*z^3", "1")],
    ],
    b2: [
        [
            "0",
            "-54*x",
            "-36*x",
            "-36*x + 54*z",
            "-36*x - 54*y",
            "0",
            "0",
        ],
        ["54*x", "0", "-54*x", "0", "54*z", "-54*y", "0"],
        ["36*x", "54*x", "0", "0", "0", "36*x + 54*z", "36*x - 54*y"],
        ["36*x - 54*z", "0", "0", "0", "27*x", "-18*x", "9*x"],
        ["36*x + 54*y", "-54*z", "0", "-27*x", "0", "9*x", "-18*x"],
        ["0", "54*y", "-36*x - 54*z", "18*x", "-9*x", "0", "27*x"],
        ["0", "0", "-36*x + 54*y", "-9*x", "18*x", "-27*x", "0"],
    ],
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcriptions_parse() {
        for f in all() {
            assert_eq!(f.b1_values().len(), 7);
            assert!(f.t_matrix().is_symmetric(), "{}", f.name);
            assert!(f.q_matrix().is_symmetric(), "{}", f.name);
        }
    }

    #[test]
    fn example_three_combination_is_a_cube() {
        let b1 = EXAMPLE_3.b1_values();
        let combo = &(&b1[0] + &b1[1].scale_int(2)) + &b1[2];
        assert_eq!(combo, rational("54*x^3"));
    }
}
