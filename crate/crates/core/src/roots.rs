//! Polynomial root extraction and root bookkeeping.
//!
//! Roots come from the eigenvalues of the companion matrix, get one Newton
//! polish step, and are then grouped into multiplicities. Grouping happens in
//! two passes: eigenvalues within `EPS_ROOT` are merged outright; larger
//! clusters (the `eps^(1/m)` spread of an m-fold root) are merged only when
//! the Taylor coefficients of the polynomial at the cluster centre confirm
//! the multiplicity.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Result, ToeplitzError};
use crate::poly::ComplexPolynomial;
use crate::tolerance::{locate, roots_match, Location};

/// A root together with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: Complex64,
    pub multiplicity: u32,
}

impl Root {
    pub fn new(value: Complex64, multiplicity: u32) -> Self {
        Self {
            value,
            multiplicity,
        }
    }

    pub fn simple(value: Complex64) -> Self {
        Self::new(value, 1)
    }
}

/// Roots split by position relative to the unit circle.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RootClassification {
    pub inside: Vec<Root>,
    pub on_circle: Vec<Root>,
    pub outside: Vec<Root>,
}

impl RootClassification {
    pub fn classify(roots: &[Root]) -> Self {
        let mut out = Self::default();
        for r in roots {
            match locate(r.value) {
                Location::Inside => out.inside.push(*r),
                Location::OnCircle => out.on_circle.push(*r),
                Location::Outside => out.outside.push(*r),
            }
        }
        out
    }

    pub fn count(roots: &[Root]) -> u32 {
        roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// Canonical root order: real part, then imaginary part.
pub fn sort_roots(roots: &mut [Root]) {
    roots.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
}

const COEFF_NOISE: f64 = 1e-14;
const SNAP_TO_ZERO: f64 = 1e-13;
const CLUSTER_RADIUS: f64 = 1e-2;
const MULTIPLICITY_TOL: f64 = 1e-9;

/// Roots of `p` with multiplicities, sorted by real then imaginary part.
pub fn poly_roots(p: &ComplexPolynomial) -> Result<Vec<Root>> {
    if p.is_zero() {
        return Err(ToeplitzError::ZeroPolynomial);
    }
    let scale = p.max_abs_coeff();
    let mut coeffs = p.coeffs().to_vec();
    while coeffs.len() > 1 && coeffs.last().unwrap().norm() <= COEFF_NOISE * scale {
        coeffs.pop();
    }
    let low_zeros = coeffs
        .iter()
        .take(coeffs.len() - 1)
        .take_while(|c| c.norm() <= COEFF_NOISE * scale)
        .count();
    let q = ComplexPolynomial::new(coeffs[low_zeros..].to_vec());

    let mut roots = Vec::new();
    if low_zeros > 0 {
        roots.push(Root::new(Complex64::new(0.0, 0.0), low_zeros as u32));
    }
    let raw = match q.degree().unwrap_or(0) {
        0 => Vec::new(),
        1 => vec![-q.coeffs()[0] / q.coeffs()[1]],
        _ => companion_eigenvalues(&q),
    };
    let polished: Vec<Complex64> = raw.into_iter().map(|r| newton_step(&q, r)).collect();
    roots.extend(cluster(&q, polished));
    for r in &mut roots {
        if r.value.norm() < SNAP_TO_ZERO {
            r.value = Complex64::new(0.0, 0.0);
        }
    }
    let roots = merge_roots(roots);
    Ok(roots)
}

fn companion_eigenvalues(q: &ComplexPolynomial) -> Vec<Complex64> {
    let n = q.degree().unwrap();
    let lead = q.leading();
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        m[(i, n - 1)] = -q.coeffs()[i] / lead;
    }
    let schur = m.schur();
    let (_, t) = schur.unpack();
    (0..n).map(|i| t[(i, i)]).collect()
}

fn newton_step(q: &ComplexPolynomial, r: Complex64) -> Complex64 {
    let v = q.eval(r);
    let d = q.derivative().eval(r);
    if d.norm() == 0.0 {
        return r;
    }
    let candidate = r - v / d;
    if candidate.is_finite() && q.eval(candidate).norm() < v.norm() {
        candidate
    } else {
        r
    }
}

#[derive(Clone)]
struct Group {
    centre: Complex64,
    members: Vec<Complex64>,
}

fn cluster(q: &ComplexPolynomial, values: Vec<Complex64>) -> Vec<Root> {
    // pass 1: direct proximity
    let mut groups: Vec<Group> = Vec::new();
    for v in values {
        match groups.iter_mut().find(|g| roots_match(g.centre, v)) {
            Some(g) => {
                g.members.push(v);
                g.centre = mean(&g.members);
            }
            None => groups.push(Group {
                centre: v,
                members: vec![v],
            }),
        }
    }

    // pass 2: validated merges of wider clusters
    'outer: loop {
        for i in 0..groups.len() {
            let centre = groups[i].centre;
            let radius = CLUSTER_RADIUS * 1f64.max(centre.norm());
            let mut neighbours: Vec<(usize, f64)> = groups
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(j, g)| (j, (g.centre - centre).norm()))
                .filter(|(_, d)| *d <= radius)
                .collect();
            neighbours.sort_by(|a, b| a.1.total_cmp(&b.1));
            for k in (1..=neighbours.len()).rev() {
                let mut members = groups[i].members.clone();
                for (j, _) in &neighbours[..k] {
                    members.extend(groups[*j].members.iter().copied());
                }
                let m = members.len();
                let c = refine_multiple(q, mean(&members), m);
                if confirms_multiplicity(q, c, m) {
                    let mut drop: Vec<usize> = neighbours[..k].iter().map(|(j, _)| *j).collect();
                    drop.push(i);
                    drop.sort_unstable();
                    for j in drop.into_iter().rev() {
                        groups.remove(j);
                    }
                    groups.push(Group { centre: c, members });
                    continue 'outer;
                }
            }
        }
        break;
    }

    groups
        .into_iter()
        .map(|g| {
            let m = g.members.len();
            let c = if m > 1 {
                refine_multiple(q, g.centre, m)
            } else {
                g.centre
            };
            Root::new(c, m as u32)
        })
        .collect()
}

fn mean(values: &[Complex64]) -> Complex64 {
    values.iter().sum::<Complex64>() / values.len() as f64
}

/// One Newton step on the (m-1)-th derivative, which has a simple root at an m-fold root.
fn refine_multiple(q: &ComplexPolynomial, c: Complex64, m: usize) -> Complex64 {
    let t = q.taylor_at(c);
    match (t.get(m - 1), t.get(m)) {
        (Some(a), Some(b)) if b.norm() > 0.0 => {
            let next = c - a / (b * m as f64);
            if next.is_finite() {
                next
            } else {
                c
            }
        }
        _ => c,
    }
}

fn confirms_multiplicity(q: &ComplexPolynomial, c: Complex64, m: usize) -> bool {
    let t = q.taylor_at(c);
    let abs_poly = ComplexPolynomial::new(
        q.coeffs()
            .iter()
            .map(|x| Complex64::new(x.norm(), 0.0))
            .collect(),
    );
    let bound = abs_poly.taylor_at(Complex64::new(c.norm(), 0.0));
    (0..m).all(|j| t[j].norm() <= MULTIPLICITY_TOL * bound[j].re.max(f64::MIN_POSITIVE))
}

/// Merge roots that match within `EPS_ROOT`, summing multiplicities, and sort.
pub fn merge_roots(roots: Vec<Root>) -> Vec<Root> {
    let mut out: Vec<Root> = Vec::with_capacity(roots.len());
    for r in roots {
        match out.iter_mut().find(|o| roots_match(o.value, r.value)) {
            Some(o) => {
                let total = o.multiplicity + r.multiplicity;
                if o.value != Complex64::new(0.0, 0.0) && r.value != Complex64::new(0.0, 0.0) {
                    o.value = (o.value * o.multiplicity as f64 + r.value * r.multiplicity as f64)
                        / total as f64;
                } else {
                    o.value = Complex64::new(0.0, 0.0);
                }
                o.multiplicity = total;
            }
            None => out.push(r),
        }
    }
    sort_roots(&mut out);
    out
}
