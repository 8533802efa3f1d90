//! Test-only oracles. Nothing here calls into the numerical code under test.
#![allow(dead_code, clippy::needless_range_loop)]

use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::SeedableRng;

pub const DEFAULT_SEED: u64 = 0x1e71_ba1a;

/// Base seed for randomized checks; `LEXIBALANCE_SEED` overrides it.
pub fn seed() -> u64 {
    std::env::var("LEXIBALANCE_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(offset: u64) -> StdRng {
    StdRng::seed_from_u64(seed().wrapping_add(offset))
}

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub type Dense = Vec<Vec<f64>>;

// ---------------------------------------------------------------------------
// Eigenvalues by inertia bisection.
//
// The number of negative pivots in the LDLᵀ factorization of A - σI equals the
// number of eigenvalues below σ, so each root of det(A - λI) can be isolated
// by bisection on σ.

fn count_below(a: &Dense, sigma: f64, tiny: f64) -> usize {
    let d = a.len();
    let mut m: Dense = a.clone();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= sigma;
    }
    let mut negatives = 0;
    for k in 0..d {
        let mut p = m[k][k];
        if p.abs() < tiny {
            p = -tiny;
        }
        if p < 0.0 {
            negatives += 1;
        }
        for i in (k + 1)..d {
            let f = m[i][k] / p;
            if f == 0.0 {
                continue;
            }
            for j in (k + 1)..d {
                m[i][j] -= f * m[k][j];
            }
        }
    }
    negatives
}

/// All eigenvalues of a symmetric matrix, descending.
pub fn brute_eigenvalues(a: &Dense) -> Vec<f64> {
    let d = a.len();
    let mut radius = 0.0f64;
    for (i, row) in a.iter().enumerate() {
        let off: f64 = row.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.abs()).sum();
        radius = radius.max(row[i].abs() + off);
    }
    let radius = radius.max(1e-300);
    let tiny = radius * 1e-300_f64.max(f64::EPSILON * 1e-3);
    let mut out = Vec::with_capacity(d);
    for idx in 0..d {
        // idx-th smallest: smallest σ with count_below(σ) > idx.
        let (mut lo, mut hi) = (-radius - 1.0, radius + 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if count_below(a, mid, tiny) > idx {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out.reverse();
    out
}

// ---------------------------------------------------------------------------
// Straight-line PCA with explicit loops.

pub fn naive_center(x: &Dense) -> (Dense, Vec<f64>) {
    let n = x.len();
    let d = x[0].len();
    let mut mean = vec![0.0; d];
    for j in 0..d {
        let mut s = 0.0;
        for i in 0..n {
            s += x[i][j];
        }
        mean[j] = s / n as f64;
    }
    let mut z = vec![vec![0.0; d]; n];
    for i in 0..n {
        for j in 0..d {
            z[i][j] = x[i][j] - mean[j];
        }
    }
    (z, mean)
}

pub fn naive_covariance(z: &Dense) -> Dense {
    let n = z.len();
    let d = z[0].len();
    let mut c = vec![vec![0.0; d]; d];
    for a in 0..d {
        for b in 0..d {
            let mut s = 0.0;
            for i in 0..n {
                s += z[i][a] * z[i][b];
            }
            c[a][b] = s / (n as f64 - 1.0);
        }
    }
    c
}

/// Cyclic Jacobi using the half-angle `atan2` form of the rotation.
/// Returns eigenpairs sorted descending, each vector sign-normalized so its
/// largest-magnitude entry (lowest index on ties) is positive.
pub fn naive_jacobi(m: &Dense) -> (Vec<f64>, Dense) {
    let d = m.len();
    let mut a = m.clone();
    let mut v = vec![vec![0.0; d]; d];
    for i in 0..d {
        v[i][i] = 1.0;
    }
    let mut norm = 0.0;
    for i in 0..d {
        for j in 0..d {
            norm += a[i][j] * a[i][j];
        }
    }
    let norm = norm.sqrt();
    for _sweep in 0..200 {
        let mut off = 0.0;
        for p in 0..d {
            for q in 0..d {
                if p != q {
                    off += a[p][q] * a[p][q];
                }
            }
        }
        if off.sqrt() <= 1e-14 * norm {
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                if a[p][q] == 0.0 {
                    continue;
                }
                let phi = 0.5 * (2.0 * a[p][q]).atan2(a[q][q] - a[p][p]);
                let (s, c) = phi.sin_cos();
                // Columns p, q of A·J.
                for k in 0..d {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                // Rows p, q of Jᵀ·(A·J).
                for k in 0..d {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..d {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut pairs: Vec<(f64, Vec<f64>)> = (0..d)
        .map(|i| {
            let mut col: Vec<f64> = (0..d).map(|k| v[k][i]).collect();
            let mut best = 0;
            for k in 0..d {
                if col[k].abs() > col[best].abs() {
                    best = k;
                }
            }
            if col[best] < 0.0 {
                for x in &mut col {
                    *x = -*x;
                }
            }
            (a[i][i], col)
        })
        .collect();
    pairs.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
    let values = pairs.iter().map(|p| p.0).collect();
    let vectors = pairs.into_iter().map(|p| p.1).collect();
    (values, vectors)
}

/// Projects `x` onto the top `k` naive eigenvectors. Returns
/// `(coords, eigenvalues, total variance)`.
pub fn naive_pca(x: &Dense, k: usize) -> (Dense, Vec<f64>, f64) {
    let (z, _) = naive_center(x);
    let cov = naive_covariance(&z);
    let (values, vectors) = naive_jacobi(&cov);
    let total: f64 = values.iter().map(|v| v.max(0.0)).sum();
    let mut coords = vec![vec![0.0; k]; z.len()];
    for i in 0..z.len() {
        for c in 0..k {
            let mut s = 0.0;
            for j in 0..z[i].len() {
                s += z[i][j] * vectors[c][j];
            }
            coords[i][c] = s;
        }
    }
    (coords, values, total)
}

pub fn naive_dot(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..a.len() {
        s += a[i] * b[i];
    }
    s
}

/// Splits on terminator runs followed by whitespace, written independently
/// of the library tokenizer.
pub fn naive_sentences(text: &str) -> Vec<String> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let mut out = Vec::new();
    let mut cur: Vec<&str> = Vec::new();
    for w in words {
        cur.push(w);
        if w.ends_with(['.', '!', '?']) {
            out.push(cur.join(" "));
            cur.clear();
        }
    }
    if !cur.is_empty() {
        out.push(cur.join(" "));
    }
    out
}

pub fn naive_ascii_rows(sentences: &[String], min_width: usize) -> Dense {
    let width = sentences.iter().map(|s| s.len()).max().unwrap().max(min_width);
    sentences
        .iter()
        .map(|s| {
            let mut row: Vec<f64> = s.bytes().map(f64::from).collect();
            row.resize(width, 0.0);
            row
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Normal distribution by Taylor series and by direct quadrature.

/// Φ from the Maclaurin series of erf; good to ~1e-14 for |x| <= 4.
pub fn series_cdf(x: f64) -> f64 {
    let t = x / std::f64::consts::SQRT_2;
    let mut term = t;
    let mut sum = t;
    let mut n = 0.0;
    loop {
        n += 1.0;
        term *= -t * t / n;
        let add = term / (2.0 * n + 1.0);
        sum += add;
        if add.abs() < 1e-17 * sum.abs().max(1e-300) || n > 400.0 {
            break;
        }
    }
    0.5 * (1.0 + 2.0 / std::f64::consts::PI.sqrt() * sum)
}

pub fn phi(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Grid with φ and a cumulative-trapezoid Φ.
pub struct NormalGrid {
    pub x: Vec<f64>,
    pub pdf: Vec<f64>,
    pub cdf: Vec<f64>,
    pub h: f64,
}

impl NormalGrid {
    pub fn new(limit: f64, h: f64) -> Self {
        let steps = (2.0 * limit / h).round() as usize;
        let x: Vec<f64> = (0..=steps).map(|i| -limit + i as f64 * h).collect();
        let pdf: Vec<f64> = x.iter().map(|&v| phi(v)).collect();
        let mut cdf = vec![0.0; x.len()];
        for i in 1..x.len() {
            cdf[i] = cdf[i - 1] + 0.5 * h * (pdf[i - 1] + pdf[i]);
        }
        Self { x, pdf, cdf, h }
    }
}

fn ln_factorial(n: usize) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

/// Expected normal order statistics `E[X_(i)]`, `i = 1..n`.
pub fn order_stat_means(n: usize, g: &NormalGrid) -> Vec<f64> {
    (1..=n)
        .map(|i| {
            let c = (ln_factorial(n) - ln_factorial(i - 1) - ln_factorial(n - i)).exp();
            let f: Vec<f64> = (0..g.x.len())
                .map(|t| {
                    let p = g.cdf[t];
                    g.x[t] * c * p.powi(i as i32 - 1) * (1.0 - p).powi((n - i) as i32) * g.pdf[t]
                })
                .collect();
            trapezoid(&f, g.h)
        })
        .collect()
}

/// Covariance matrix of normal order statistics by 2-D quadrature.
pub fn order_stat_covariance(n: usize, g: &NormalGrid) -> Dense {
    let m = order_stat_means(n, g);
    let len = g.x.len();
    let mut v = vec![vec![0.0; n]; n];
    for i in 1..=n {
        // E[X_(i)^2]
        let c = (ln_factorial(n) - ln_factorial(i - 1) - ln_factorial(n - i)).exp();
        let f: Vec<f64> = (0..len)
            .map(|t| {
                let p = g.cdf[t];
                g.x[t] * g.x[t] * c * p.powi(i as i32 - 1) * (1.0 - p).powi((n - i) as i32) * g.pdf[t]
            })
            .collect();
        v[i - 1][i - 1] = trapezoid(&f, g.h) - m[i - 1] * m[i - 1];
        for j in (i + 1)..=n {
            let c = (ln_factorial(n)
                - ln_factorial(i - 1)
                - ln_factorial(j - i - 1)
                - ln_factorial(n - j))
            .exp();
            let mut s = 0.0;
            for a in 0..len {
                let fa = g.cdf[a].powi(i as i32 - 1) * g.pdf[a] * g.x[a];
                if fa == 0.0 {
                    continue;
                }
                for b in a..len {
                    let w = if a == b { 0.5 } else { 1.0 };
                    let between = (g.cdf[b] - g.cdf[a]).max(0.0);
                    s += w
                        * fa
                        * between.powi((j - i - 1) as i32)
                        * (1.0 - g.cdf[b]).powi((n - j) as i32)
                        * g.pdf[b]
                        * g.x[b];
                }
            }
            let e = c * s * g.h * g.h;
            v[i - 1][j - 1] = e - m[i - 1] * m[j - 1];
            v[j - 1][i - 1] = v[i - 1][j - 1];
        }
    }
    v
}

pub fn trapezoid(f: &[f64], h: f64) -> f64 {
    let n = f.len();
    h * (f.iter().sum::<f64>() - 0.5 * (f[0] + f[n - 1]))
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
pub fn solve(a: &Dense, b: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut m: Dense = a.iter().zip(b).map(|(r, &v)| {
        let mut r = r.clone();
        r.push(v);
        r
    }).collect();
    for k in 0..n {
        let piv = (k..n).max_by(|&x, &y| m[x][k].abs().partial_cmp(&m[y][k].abs()).unwrap()).unwrap();
        m.swap(k, piv);
        for i in (k + 1)..n {
            let f = m[i][k] / m[k][k];
            for j in k..=n {
                m[i][j] -= f * m[k][j];
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = m[i][n];
        for j in (i + 1)..n {
            s -= m[i][j] * x[j];
        }
        x[i] = s / m[i][i];
    }
    x
}

/// Exact Shapiro-Wilk weights `mᵀV⁻¹ / ‖mᵀV⁻¹‖` for ascending order statistics.
pub fn exact_sw_weights(n: usize, g: &NormalGrid) -> Vec<f64> {
    let m = order_stat_means(n, g);
    let v = order_stat_covariance(n, g);
    let a = solve(&v, &m);
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    a.iter().map(|x| x / norm).collect()
}

// ---------------------------------------------------------------------------
// Anderson-Darling from its integral definition.

/// `A² = n ∫₀¹ (F_n(u) - u)² / (u (1 - u)) du` with `u = Φ((x - x̄)/s)`.
pub fn ecdf_integral_a2(sample: &[f64]) -> f64 {
    let n = sample.len();
    let mean = sample.iter().sum::<f64>() / n as f64;
    let sd = (sample.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n as f64 - 1.0)).sqrt();
    let mut u: Vec<f64> = sample.iter().map(|&x| series_cdf((x - mean) / sd)).collect();
    u.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut knots = vec![0.0];
    knots.extend(&u);
    knots.push(1.0);
    let mut total = 0.0;
    for seg in 0..=n {
        let (a, b) = (knots[seg], knots[seg + 1]);
        if b <= a {
            continue;
        }
        let level = seg as f64 / n as f64;
        // Composite Simpson; the integrand is bounded on every segment.
        let m = 2000;
        let h = (b - a) / m as f64;
        let f = |t: f64| {
            let denom = t * (1.0 - t);
            if denom <= 0.0 {
                // F_n is 0 next to u = 0 and 1 next to u = 1; both limits are 0.
                0.0
            } else {
                (level - t).powi(2) / denom
            }
        };
        let mut s = f(a) + f(b);
        for k in 1..m {
            let t = a + k as f64 * h;
            s += if k % 2 == 1 { 4.0 } else { 2.0 } * f(t);
        }
        total += s * h / 3.0;
    }
    n as f64 * total
}
