//! Named derivation matrices, built from their unit-matrix formulas.
//!
//! Indices in the formulas are 1-based; `unit` converts.

use crate::exactlin::{Field, Mat, Scalar};

/// `e_{r,c}` in a `d × d` matrix, 1-based.
pub fn unit(d: usize, r: usize, c: usize) -> Mat {
    Mat::unit(Field::Q, d, r - 1, c - 1)
}

fn sum(d: usize, terms: impl IntoIterator<Item = (i64, usize, usize)>) -> Mat {
    let mut m = Mat::zeros(Field::Q, d, d);
    for (s, r, c) in terms {
        m[(r - 1, c - 1)] += &Scalar::from_int(s);
    }
    m
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn lin(terms: &[(i64, &Mat)]) -> Mat {
    let (_, first) = terms[0];
    let mut out = Mat::zeros(first.field(), first.rows(), first.cols());
    for (c, m) in terms {
        out = out.try_add(&m.scale(&Scalar::from_int(*c))).expect("same shape");
    }
    out
}

/// `x, y, E_i, A_i, B_i` for a Heisenberg-type algebra of dimension `2n+1`.
#[derive(Debug, Clone)]
pub struct HeisenbergNamed {
    pub n: usize,
    pub x: Mat,
    pub y: Mat,
    /// `E_1, …, E_{n-1}`
    pub e: Vec<Mat>,
    pub a: Vec<Mat>,
    pub b: Vec<Mat>,
}

impl HeisenbergNamed {
    /// Basis `e_1..e_n, f_1..f_n, z`.
    pub fn grouped(n: usize) -> Self {
        let d = 2 * n + 1;
        HeisenbergNamed {
            n,
            x: sum(d, (1..=n).map(|k| (1, k, k)).chain([(1, d, d)])),
            y: sum(d, (1..=n).map(|k| (1, n + k, n + k)).chain([(1, d, d)])),
            e: (1..n)
                .map(|i| {
                    sum(
                        d,
                        (1..=n - i).flat_map(|k| [(1, k, k + i), (-1, n + i + k, n + k)]),
                    )
                })
                .collect(),
            a: (1..=n).map(|i| unit(d, d, i)).collect(),
            b: (1..=n).map(|i| unit(d, d, n + i)).collect(),
        }
    }

    /// Basis `e_1, f_1, …, e_n, f_n, z`.
    pub fn interleaved(n: usize) -> Self {
        let d = 2 * n + 1;
        HeisenbergNamed {
            n,
            x: sum(d, (1..=n).map(|k| (1, 2 * k - 1, 2 * k - 1)).chain([(1, d, d)])),
            y: sum(d, (1..=n).map(|k| (1, 2 * k, 2 * k)).chain([(1, d, d)])),
            e: (1..n)
                .map(|i| {
                    sum(
                        d,
                        (0..n - i).flat_map(|k| {
                            [(1, 2 * (k + i + 1), 2 * (k + 1)), (-1, 2 * k + 1, 2 * (k + i) + 1)]
                        }),
                    )
                })
                .collect(),
            a: (1..=n).map(|i| unit(d, d, 2 * i - 1)).collect(),
            b: (1..=n).map(|i| unit(d, d, 2 * i)).collect(),
        }
    }

    pub fn e(&self, i: usize) -> &Mat {
        &self.e[i - 1]
    }

    pub fn a(&self, i: usize) -> &Mat {
        &self.a[i - 1]
    }

    pub fn b(&self, i: usize) -> &Mat {
        &self.b[i - 1]
    }

    /// `x, y, E…, A…, B…`
    pub fn basis(&self) -> Vec<Mat> {
        let mut out = vec![self.x.clone(), self.y.clone()];
        out.extend(self.e.iter().cloned());
        out.extend(self.a.iter().cloned());
        out.extend(self.b.iter().cloned());
        out
    }

    pub fn ab(&self) -> Vec<Mat> {
        self.a.iter().chain(&self.b).cloned().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitFamily {
    /// `𝔩^{J_0}`
    Heisenberg0,
    Kronecker,
}

/// The extra generators `c_h`, `b_h` of `Der(𝔩^{J_0})` and `Der(𝔨_n)`, interleaved basis.
#[derive(Debug, Clone)]
pub struct SplitNamed {
    pub base: HeisenbergNamed,
    pub c: Vec<(usize, Mat)>,
    pub b: Vec<(usize, Mat)>,
}

impl SplitNamed {
    pub fn new(family: SplitFamily, n: usize) -> Self {
        let d = 2 * n + 1;
        let shift = match family {
            SplitFamily::Heisenberg0 => 0,
            SplitFamily::Kronecker => 1,
        };
        let c_mat = |h: usize| {
            sum(
                d,
                (0..=h - 2).map(|i| (sign(i + shift), 2 * (h - i - 1) - 1, 2 * (1 + i))),
            )
        };
        let b_mat = |h: usize| {
            sum(
                d,
                (0..=2 * n - h).map(|i| (sign(i + shift), 2 * (n - i), 2 * (h - n + i) - 1)),
            )
        };
        let even = n.is_multiple_of(2);
        let (c_range, b_range): (Vec<usize>, Vec<usize>) = match (family, even) {
            (SplitFamily::Heisenberg0, true) => ((2..=n).step_by(2).collect(), (n + 2..=2 * n).step_by(2).collect()),
            (SplitFamily::Heisenberg0, false) => ((2..=n + 1).step_by(2).collect(), (n + 1..=2 * n).step_by(2).collect()),
            (SplitFamily::Kronecker, true) => ((3..=n + 1).step_by(2).collect(), (n + 1..2 * n).step_by(2).collect()),
            (SplitFamily::Kronecker, false) => ((3..=n).step_by(2).collect(), (n + 2..2 * n).step_by(2).collect()),
        };
        SplitNamed {
            base: HeisenbergNamed::interleaved(n),
            c: c_range.into_iter().map(|h| (h, c_mat(h))).collect(),
            b: b_range.into_iter().map(|h| (h, b_mat(h))).collect(),
        }
    }

    pub fn c(&self, h: usize) -> Option<&Mat> {
        self.c.iter().find(|(k, _)| *k == h).map(|(_, m)| m)
    }

    pub fn b(&self, h: usize) -> Option<&Mat> {
        self.b.iter().find(|(k, _)| *k == h).map(|(_, m)| m)
    }

    /// `x, y, E…, c…, b…, A…, B…`
    pub fn basis(&self) -> Vec<Mat> {
        let mut out = vec![self.base.x.clone(), self.base.y.clone()];
        out.extend(self.base.e.iter().cloned());
        out.extend(self.c.iter().map(|(_, m)| m.clone()));
        out.extend(self.b.iter().map(|(_, m)| m.clone()));
        out.extend(self.base.ab());
        out
    }

    /// `x−y, c_{n+1}, b_{n+1}` when both exist.
    pub fn levi(&self) -> Option<Vec<Mat>> {
        let n = self.base.n;
        Some(vec![
            lin(&[(1, &self.base.x), (-1, &self.base.y)]),
            self.c(n + 1)?.clone(),
            self.b(n + 1)?.clone(),
        ])
    }

    /// The stated nilradical: `E…`, every `c_h`, `b_h` other than index `n+1`, `A…`, `B…`.
    pub fn nilradical(&self) -> Vec<Mat> {
        let n = self.base.n;
        let mut out: Vec<Mat> = self.base.e.clone();
        out.extend(self.c.iter().filter(|(h, _)| *h != n + 1).map(|(_, m)| m.clone()));
        out.extend(self.b.iter().filter(|(h, _)| *h != n + 1).map(|(_, m)| m.clone()));
        out.extend(self.base.ab());
        out
    }

    /// The stated radical: `x+y` together with the nilradical.
    pub fn radical(&self) -> Vec<Mat> {
        let mut out = vec![lin(&[(1, &self.base.x), (1, &self.base.y)])];
        out.extend(self.nilradical());
        out
    }
}

/// Named derivations of the Dieudonné algebra, basis `e_1..e_{2n+1}, z`.
#[derive(Debug, Clone)]
pub struct DieudonneNamed {
    pub n: usize,
    pub x: Mat,
    pub y: Mat,
    /// `E_1, …, E_n`
    pub e: Vec<Mat>,
    /// `A_1, …, A_{2n+1}`
    pub a: Vec<Mat>,
}

impl DieudonneNamed {
    pub fn new(n: usize) -> Self {
        let d = 2 * n + 2;
        let mut e = Vec::new();
        for i in 1..=n.div_ceil(2) {
            e.push(sum(d, (1..2 * i).map(|k| (sign(k + 1), k, n + 2 * i + 1 - k))));
        }
        if n.is_multiple_of(2) {
            for j in 1..=n / 2 {
                e.push(sum(d, (1..=n + 2 - 2 * j).map(|k| (sign(k + 1), n + 2 - k, n + 2 * j - 1 + k))));
            }
        } else {
            for j in 1..=(n - 1) / 2 {
                e.push(sum(d, (1..=n + 1 - 2 * j).map(|k| (sign(k), n + 2 - k, n + 2 * j + k))));
            }
        }
        DieudonneNamed {
            n,
            x: sum(d, (1..=n + 1).map(|i| (1, i, i)).chain([(1, d, d)])),
            y: sum(d, (n + 2..=d).map(|i| (1, i, i))),
            e,
            a: (1..d).map(|i| unit(d, d, i)).collect(),
        }
    }

    pub fn e(&self, i: usize) -> &Mat {
        &self.e[i - 1]
    }

    pub fn a(&self, i: usize) -> &Mat {
        &self.a[i - 1]
    }

    pub fn basis(&self) -> Vec<Mat> {
        let mut out = vec![self.x.clone(), self.y.clone()];
        out.extend(self.e.iter().cloned());
        out.extend(self.a.iter().cloned());
        out
    }

    /// `(ε, j)` with `ε` the only nonzero entry of row `i` of `E_k`, at column `j`.
    pub fn row_entry(&self, k: usize, i: usize) -> Option<(Scalar, usize)> {
        let m = self.e(k);
        (0..m.cols())
            .find(|&c| !m[(i - 1, c)].is_zero())
            .map(|c| (m[(i - 1, c)].clone(), c + 1))
    }
}

/// Named derivations of the real algebra `𝔩₅ᴿ`, basis `e_1, f_1, e_2, f_2, z`.
#[derive(Debug, Clone)]
pub struct RealNamed {
    pub x: Mat,
    pub y: Mat,
    pub e: Mat,
    pub f: Mat,
    pub g: Mat,
    pub a: Vec<Mat>,
    pub b: Vec<Mat>,
}

impl RealNamed {
    pub fn new() -> Self {
        RealNamed {
            x: sum(5, [(1, 1, 1), (1, 3, 3), (1, 5, 5)]),
            y: sum(5, [(1, 2, 2), (1, 4, 4), (1, 5, 5)]),
            e: sum(5, [(1, 1, 3), (1, 2, 4), (-1, 3, 1), (-1, 4, 2)]),
            f: sum(5, [(1, 1, 2), (1, 3, 4)]),
            g: sum(5, [(1, 2, 1), (1, 4, 3)]),
            a: vec![unit(5, 5, 1), unit(5, 5, 3)],
            b: vec![unit(5, 5, 2), unit(5, 5, 4)],
        }
    }

    pub fn ab(&self) -> Vec<Mat> {
        self.a.iter().chain(&self.b).cloned().collect()
    }
}

impl Default for RealNamed {
    fn default() -> Self {
        Self::new()
    }
}
