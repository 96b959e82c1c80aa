//! Bond-incident-degree indices: the augmented Zagreb index (exact), the
//! atom-bond connectivity index (binary64), and user kernels.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;

/// Exact rational, always normalized with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("edge with degrees ({0}, {1}) is outside the kernel's domain")]
    DegenerateEdge(usize, usize),
    #[error("unsupported graph: {0}")]
    UnsupportedGraph(&'static str),
    #[error("argument outside domain: {0}")]
    OutOfDomain(String),
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// `(xy / (x + y - 2))^3`.
pub fn psi(x: usize, y: usize) -> Result<Rational, IndexError> {
    if x == 0 || y == 0 || x + y <= 2 {
        return Err(IndexError::DegenerateEdge(x, y));
    }
    let base = Rational::new(BigInt::from(x * y), BigInt::from(x + y - 2));
    Ok(&base * &base * &base)
}

fn psi_f64(x: f64, y: f64) -> f64 {
    (x * y / (x + y - 2.0)).powi(3)
}

fn check_connected(g: &Graph) -> Result<(), IndexError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(IndexError::UnsupportedGraph("graph is not connected"))
    }
}

/// Exact augmented Zagreb index. Edges are grouped by degree pair so each
/// distinct Ψ value is evaluated once.
pub fn azi(g: &Graph) -> Result<Rational, IndexError> {
    check_connected(g)?;
    let mut pairs: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (u, v) in g.edges() {
        let (a, b) = (g.degree(u), g.degree(v));
        *pairs.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    let mut total = Rational::zero();
    for ((a, b), count) in pairs {
        let w = psi(a, b).map_err(|_| IndexError::UnsupportedGraph("K2 has a (1,1) edge"))?;
        total += w * integer(count);
    }
    Ok(total)
}

pub fn abc(g: &Graph) -> Result<f64, IndexError> {
    check_connected(g)?;
    Ok(g.edges()
        .map(|(u, v)| abc_weight(g.degree(u) as f64, g.degree(v) as f64))
        .sum())
}

fn abc_weight(x: f64, y: f64) -> f64 {
    ((x + y - 2.0) / (x * y)).sqrt()
}

type RealWeight = dyn Fn(usize, usize) -> Option<f64> + Send + Sync;
type ExactWeight = dyn Fn(usize, usize) -> Option<Rational> + Send + Sync;

/// A symmetric edge-weight function of the endpoint degrees.
#[derive(Clone)]
pub struct IndexKernel {
    name: String,
    weight: Arc<RealWeight>,
    exact_weight: Option<Arc<ExactWeight>>,
}

impl fmt::Debug for IndexKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IndexKernel")
            .field("name", &self.name)
            .field("exact", &self.exact_weight.is_some())
            .finish()
    }
}

impl IndexKernel {
    /// A kernel without an exact route. `weight` returns `None` where it is
    /// undefined.
    pub fn new(
        name: impl Into<String>,
        weight: impl Fn(usize, usize) -> Option<f64> + Send + Sync + 'static,
    ) -> Self {
        IndexKernel {
            name: name.into(),
            weight: Arc::new(weight),
            exact_weight: None,
        }
    }

    pub fn with_exact(
        mut self,
        exact: impl Fn(usize, usize) -> Option<Rational> + Send + Sync + 'static,
    ) -> Self {
        self.exact_weight = Some(Arc::new(exact));
        self
    }

    pub fn azi() -> Self {
        IndexKernel::new("azi", |x, y| {
            (x + y > 2).then(|| psi_f64(x as f64, y as f64))
        })
        .with_exact(|x, y| psi(x, y).ok())
    }

    pub fn abc() -> Self {
        IndexKernel::new("abc", |x, y| {
            (x > 0 && y > 0).then(|| abc_weight(x as f64, y as f64))
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_exact(&self) -> bool {
        self.exact_weight.is_some()
    }

    pub fn weight(&self, x: usize, y: usize) -> Option<f64> {
        (self.weight)(x, y)
    }

    pub fn exact_weight(&self, x: usize, y: usize) -> Option<Rational> {
        self.exact_weight.as_ref().and_then(|w| w(x, y))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BidValue {
    pub value: f64,
    pub exact: Option<Rational>,
}

/// Plain edge-by-edge sum of kernel weights.
pub fn bid_index(g: &Graph, kernel: &IndexKernel) -> Result<BidValue, IndexError> {
    let mut value = 0.0;
    let mut exact = kernel.is_exact().then(Rational::zero);
    for (u, v) in g.edges() {
        let (a, b) = (g.degree(u), g.degree(v));
        value += kernel
            .weight(a, b)
            .ok_or(IndexError::DegenerateEdge(a, b))?;
        if let Some(sum) = exact.as_mut() {
            *sum += kernel
                .exact_weight(a, b)
                .ok_or(IndexError::DegenerateEdge(a, b))?;
        }
    }
    Ok(BidValue { value, exact })
}

/// `(n - 2k - 1)((n - 1)/(n - 2))^3 + 24k`, the index of the extremal cactus.
pub fn f_bound(n: usize, k: usize) -> Result<Rational, IndexError> {
    if n <= 2 {
        return Err(IndexError::OutOfDomain(format!(
            "f_bound needs n >= 3, got {n}"
        )));
    }
    let ratio = Rational::new(BigInt::from(n - 1), BigInt::from(n - 2));
    let cube = &ratio * &ratio * &ratio;
    let pendants = BigInt::from(n as i64) - BigInt::from(2 * k as i64 + 1);
    Ok(cube * Rational::from_integer(pendants) + integer(24 * k as i64))
}

/// `Ψ(x, y) - Ψ(x - p, y)` on real arguments with `p >= 1`, `x > p`,
/// `x >= 2`, `y >= 2`.
pub fn kernel_gap(x: f64, y: f64, p: f64) -> Result<f64, IndexError> {
    if !(p >= 1.0 && x > p && x >= 2.0 && y >= 2.0) || !(x.is_finite() && y.is_finite()) {
        return Err(IndexError::OutOfDomain(format!(
            "kernel_gap({x}, {y}, {p}) needs p >= 1, x > p, x >= 2, y >= 2"
        )));
    }
    Ok(psi_f64(x, y) - psi_f64(x - p, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn paw() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(2, 2).unwrap(), integer(8));
        assert_eq!(psi(3, 3).unwrap(), rational(729, 64));
        assert_eq!(to_f64(&psi(3, 3).unwrap()), 11.390625);
        assert_eq!(psi(1, 1), Err(IndexError::DegenerateEdge(1, 1)));
        assert_eq!(psi(1, 3).unwrap(), rational(27, 8));
    }

    #[test]
    fn azi_values() {
        assert_eq!(azi(&path(4)).unwrap(), integer(24));
        assert_eq!(azi(&star(4)).unwrap(), rational(81, 8));
        assert_eq!(azi(&paw()).unwrap(), rational(219, 8));
        assert_eq!(azi(&Graph::empty(1)).unwrap(), integer(0));
    }

    #[test]
    fn azi_rejects_k2_and_disconnected() {
        assert!(matches!(
            azi(&path(2)),
            Err(IndexError::UnsupportedGraph(_))
        ));
        assert!(matches!(
            azi(&Graph::empty(3)),
            Err(IndexError::UnsupportedGraph(_))
        ));
    }

    #[test]
    fn abc_values() {
        assert!((abc(&path(4)).unwrap() - 3.0 / 2f64.sqrt()).abs() < 1e-12);
        assert!((abc(&path(4)).unwrap() - 2.121320).abs() < 1e-6);
        assert!((abc(&star(4)).unwrap() - 6f64.sqrt()).abs() < 1e-12);
        assert_eq!(abc(&path(2)).unwrap(), 0.0);
        assert!(abc(&Graph::empty(2)).is_err());
    }

    #[test]
    fn bid_kernels() {
        let p4 = path(4);
        let v = bid_index(&p4, &IndexKernel::azi()).unwrap();
        assert_eq!(v.exact, Some(integer(24)));
        assert_eq!(v.value, 24.0);
        let v = bid_index(&p4, &IndexKernel::abc()).unwrap();
        assert!((v.value - 2.121320).abs() < 1e-6);
        assert_eq!(v.exact, None);
        let ones = IndexKernel::new("one", |_, _| Some(1.0)).with_exact(|_, _| Some(integer(1)));
        let g = paw();
        assert_eq!(bid_index(&g, &ones).unwrap().value, g.edge_count() as f64);
        assert_eq!(
            bid_index(&path(2), &IndexKernel::azi()),
            Err(IndexError::DegenerateEdge(1, 1))
        );
    }

    #[test]
    fn f_bound_values() {
        assert_eq!(f_bound(5, 2).unwrap(), integer(48));
        assert_eq!(f_bound(4, 0).unwrap(), rational(81, 8));
        assert_eq!(f_bound(4, 1).unwrap(), rational(219, 8));
        assert!(matches!(f_bound(2, 0), Err(IndexError::OutOfDomain(_))));
    }

    #[test]
    fn kernel_gap_values() {
        assert_eq!(kernel_gap(3.0, 2.0, 1.0).unwrap(), 0.0);
        assert!((kernel_gap(3.0, 3.0, 1.0).unwrap() - 3.390625).abs() < 1e-12);
        assert!((kernel_gap(2.0, 5.0, 1.0).unwrap() - 6.046875).abs() < 1e-12);
        assert!(kernel_gap(2.0, 5.0, 2.0).is_err());
        assert!(kernel_gap(3.0, 1.5, 1.0).is_err());
        assert!(kernel_gap(3.0, 3.0, 0.5).is_err());
        assert!(kernel_gap(f64::NAN, 3.0, 1.0).is_err());
    }

    #[test]
    fn psi_two_is_constant() {
        for y in 2..=100 {
            assert_eq!(psi(2, y).unwrap(), integer(8));
        }
    }

    #[test]
    fn psi_one_decreasing_and_psi_x_increasing() {
        for y in 2..100 {
            assert!(psi(1, y + 1).unwrap() < psi(1, y).unwrap());
        }
        for x in 3..=20 {
            for y in 3..100 {
                assert!(psi(x, y + 1).unwrap() > psi(x, y).unwrap());
            }
        }
    }

    #[test]
    fn f_bound_increasing_in_k() {
        for n in 4..=200 {
            for k in 0..(n - 1) / 2 {
                assert!(f_bound(n, k + 1).unwrap() > f_bound(n, k).unwrap());
            }
        }
    }

    #[test]
    fn isomorphic_graphs_share_values() {
        let g = paw();
        let h = g.relabel(&[3, 1, 0, 2]);
        assert_eq!(azi(&g).unwrap(), azi(&h).unwrap());
        assert!((abc(&g).unwrap() - abc(&h).unwrap()).abs() < 1e-12);
    }
}
