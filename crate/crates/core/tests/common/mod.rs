//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use graphsig::{
    dft_basis, eigenbasis, standard_graph, Basis64, Exponent, GraphFamily, Matrix64, ScalarField, ScalarSignal64,
    Signal64, Space64, C,
};
use rand::Rng;

pub fn ex(s: &str) -> Exponent {
    s.parse().unwrap()
}

pub fn path_bases(n: usize) -> Vec<(String, Basis64)> {
    let g = standard_graph(GraphFamily::Path, n, false).unwrap();
    let mut out = vec![("U_A".to_string(), eigenbasis(&g.adjacency()).unwrap())];
    out.push(("U_L".to_string(), eigenbasis(&g.laplacian().unwrap()).unwrap()));
    if let Ok(nl) = g.normalized_laplacian() {
        out.push(("U_NL".to_string(), eigenbasis(&nl).unwrap()));
    }
    out
}

/// Identity, DFT(4) and the three path-4 eigenbases.
pub fn five_bases() -> Vec<(String, Basis64)> {
    let mut out = vec![("I".to_string(), Basis64::identity(4)), ("U_F".to_string(), dft_basis(4))];
    out.extend(path_bases(4));
    out
}

/// `diag(H, I_{n-2})` with `H` the 2×2 Hadamard matrix; every vertex past
/// the second has vanishing spectral entries.
pub fn block_basis(n: usize) -> Basis64 {
    let s = 0.5f64.sqrt();
    let u = Matrix64::from_fn(n, n, |r, c| match (r, c) {
        (0, 0) | (0, 1) | (1, 0) => C::new(s, 0.0),
        (1, 1) => C::new(-s, 0.0),
        _ if r == c => C::new(1.0, 0.0),
        _ => C::new(0.0, 0.0),
    });
    Basis64::from_matrix(u, 1e-12).unwrap()
}

/// Random unitary by Gram–Schmidt on a matrix with uniform complex entries.
pub fn random_unitary<R: Rng>(n: usize, rng: &mut R) -> Basis64 {
    let mut cols: Vec<Vec<C<f64>>> = Vec::new();
    while cols.len() < n {
        let mut v: Vec<C<f64>> =
            (0..n).map(|_| C::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        for c in &cols {
            let dot = c.iter().zip(&v).fold(C::new(0.0, 0.0), |acc, (a, b)| acc + a.conj() * b);
            for (x, y) in v.iter_mut().zip(c) {
                *x -= dot * y;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-3 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    let u = Matrix64::from_fn(n, n, |r, c| cols[c][r]);
    Basis64::from_matrix(u, 1e-10).unwrap()
}

pub fn spaces() -> Vec<(String, Space64)> {
    vec![
        ("R^3".into(), Space64::euclidean(3, ScalarField::Real).unwrap()),
        ("C^2".into(), Space64::euclidean(2, ScalarField::Complex).unwrap()),
        ("C^2_inf".into(), Space64::finite_dim(2, Exponent::INF, ScalarField::Complex).unwrap()),
        ("R^3_l3".into(), Space64::finite_dim(3, ex("3"), ScalarField::Real).unwrap()),
        ("C[0,1]^2".into(), Space64::sampled_functions(5, 2, 0.0, 1.0, ScalarField::Real).unwrap()),
    ]
}

pub fn random_signal<R: Rng>(space: &Space64, n: usize, rng: &mut R) -> Signal64 {
    Signal64::from_rows(*space, (0..n).map(|_| space.random_coords(rng)).collect()).unwrap()
}

/// Random signal where each vertex is zeroed with probability one half,
/// so localized signals are well represented.
pub fn random_sparse_signal<R: Rng>(space: &Space64, n: usize, rng: &mut R) -> Signal64 {
    let rows = (0..n)
        .map(|_| if rng.random_bool(0.5) { space.random_coords(rng) } else { vec![C::new(0.0, 0.0); space.coord_len()] })
        .collect();
    Signal64::from_rows(*space, rows).unwrap()
}

pub fn random_nonzero_signal<R: Rng>(space: &Space64, n: usize, rng: &mut R) -> Signal64 {
    loop {
        let f = if rng.random_bool(0.5) { random_signal(space, n, rng) } else { random_sparse_signal(space, n, rng) };
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_scalar<R: Rng>(n: usize, complex: bool, rng: &mut R) -> ScalarSignal64 {
    ScalarSignal64::new(
        (0..n)
            .map(|_| C::new(rng.random_range(-1.0..1.0), if complex { rng.random_range(-1.0..1.0) } else { 0.0 }))
            .collect(),
    )
}

/// `(Σ aᵢ^p)^{1/p}` by the textbook formula, `max` for `p = ∞`.
pub fn naive_lp(mags: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        mags.iter().copied().fold(0.0, f64::max)
    } else {
        mags.iter().map(|a| a.powf(p)).sum::<f64>().powf(1.0 / p)
    }
}

pub fn conj_exp(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

/// `f̂(k) = Σ_n conj(u_k(n)) f(n)` by explicit loops over the raw matrix.
pub fn naive_gft(f: &Signal64, b: &Basis64) -> Vec<Vec<C<f64>>> {
    let n = f.len();
    let d = f.space().coord_len();
    (0..n)
        .map(|k| {
            (0..d)
                .map(|j| (0..n).fold(C::new(0.0, 0.0), |acc, v| acc + b.matrix()[(v, k)].conj() * f.value(v)[j]))
                .collect()
        })
        .collect()
}

pub fn rows_max_diff(a: &[Vec<C<f64>>], b: &Signal64) -> f64 {
    a.iter().enumerate().flat_map(|(n, row)| row.iter().zip(b.value(n)).map(|(x, y)| (x - y).norm())).fold(0.0, f64::max)
}
