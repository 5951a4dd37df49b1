use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A dense square matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    d: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zero(d: usize) -> Self {
        Matrix {
            d,
            data: vec![Rational::zero(); d * d],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zero(d);
        for i in 0..d {
            m.data[i * d + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::Shape(format!(
                "matrix rows must all have length {d}"
            )));
        }
        Ok(Matrix {
            d,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.d + c]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.data
            .chunks(self.d.max(1))
            .take(self.d)
            .map(<[_]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let d = self.d;
        Matrix {
            d,
            data: (0..d * d)
                .map(|x| self.data[(x % d) * d + x / d].clone())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix {
            d: self.d,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows()
            .iter()
            .map(|r| r.iter().map(rational::format).collect())
            .collect()
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, o: &Matrix) -> Matrix {
        Matrix {
            d: self.d,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, o: &Matrix) -> Matrix {
        Matrix {
            d: self.d,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, o: &Matrix) -> Matrix {
        let d = self.d;
        let mut out = Matrix::zero(d);
        for r in 0..d {
            for k in 0..d {
                let a = &self.data[r * d + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    out.data[r * d + c] += a * &o.data[k * d + c];
                }
            }
        }
        out
    }
}
