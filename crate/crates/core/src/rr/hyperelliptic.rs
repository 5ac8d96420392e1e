//! Riemann–Roch spaces on `y^2 = f(x)` with `f` monic of even degree `2g + 2`.
//!
//! A function is `(p + q y) / den` with `den` a product of the `x`-minimal
//! polynomials of the finite places where poles are allowed. Its numerator
//! lies in `F[x] + F[x] y`, so `L(D)` is cut out of a finite-dimensional
//! space of pairs `(p, q)` by valuation conditions at finitely many places.

use crate::algebra::ext::ExtField;
use crate::algebra::field::{Field, FiniteField};
use crate::algebra::linalg;
use crate::algebra::poly::{self, Poly};
use crate::algebra::prime::PrimeField;
use crate::curve::series::{self, Series};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum HypPlace<F: Field> {
    /// `y / x^{g+1} -> +1`.
    InfPlus,
    /// `y / x^{g+1} -> -1`.
    InfMinus,
    /// Monic irreducible `m` with `y = r(x)` at its roots (`r = 0` when `m | f`).
    Point { m: Poly<F>, r: Poly<F> },
    /// Monic irreducible `m` with `f` not a square in `F[x]/m`.
    Conjugate { m: Poly<F> },
}

impl<F: Field> PartialEq for HypPlace<F> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (HypPlace::InfPlus, HypPlace::InfPlus) | (HypPlace::InfMinus, HypPlace::InfMinus) => true,
            (HypPlace::Point { m: a, r: b }, HypPlace::Point { m: c, r: d }) => a == c && b == d,
            (HypPlace::Conjugate { m: a }, HypPlace::Conjugate { m: c }) => a == c,
            _ => false,
        }
    }
}

impl<F: Field> Eq for HypPlace<F> {}

impl<F: Field> std::hash::Hash for HypPlace<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        std::mem::discriminant(self).hash(state);
        match self {
            HypPlace::Point { m, r } => {
                m.hash(state);
                r.hash(state);
            }
            HypPlace::Conjugate { m } => m.hash(state),
            _ => {}
        }
    }
}

impl<F: Field> HypPlace<F> {
    pub fn degree(&self) -> usize {
        match self {
            HypPlace::InfPlus | HypPlace::InfMinus => 1,
            HypPlace::Point { m, .. } => m.len() - 1,
            HypPlace::Conjugate { m } => 2 * (m.len() - 1),
        }
    }

    pub fn x_poly(&self) -> Option<&Poly<F>> {
        match self {
            HypPlace::Point { m, .. } | HypPlace::Conjugate { m } => Some(m),
            _ => None,
        }
    }
}

/// Divisor on a hyperelliptic curve, kept as a list without repeated places.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypDivisor<F: Field> {
    pub terms: Vec<(HypPlace<F>, i64)>,
}

impl<F: Field> Default for HypDivisor<F> {
    fn default() -> Self {
        HypDivisor { terms: Vec::new() }
    }
}

impl<F: Field> HypDivisor<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: &[(HypPlace<F>, i64)]) -> Self {
        let mut d = Self::zero();
        for (p, c) in terms {
            d.add_term(p.clone(), *c);
        }
        d
    }

    pub fn add_term(&mut self, p: HypPlace<F>, c: i64) {
        if c == 0 {
            return;
        }
        if let Some(i) = self.terms.iter().position(|(q, _)| *q == p) {
            self.terms[i].1 += c;
            if self.terms[i].1 == 0 {
                self.terms.remove(i);
            }
        } else {
            self.terms.push((p, c));
        }
    }

    pub fn coeff(&self, p: &HypPlace<F>) -> i64 {
        self.terms.iter().find(|(q, _)| q == p).map_or(0, |(_, c)| *c)
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(p, c)| c * p.degree() as i64).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), *c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * k);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    /// Same multiset of terms, ignoring order.
    pub fn same_as(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len() && self.terms.iter().all(|(p, c)| other.coeff(p) == *c)
    }

    pub fn is_effective(&self) -> bool {
        self.terms.iter().all(|(_, c)| *c > 0)
    }
}

/// `(p + q y) / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypFunction<F: Field> {
    pub p: Poly<F>,
    pub q: Poly<F>,
    pub den: Poly<F>,
}

#[derive(Clone, Debug)]
pub struct HypSpace<F: Field> {
    pub den: Poly<F>,
    /// Bound on `deg p`; `deg q <= n - g - 1`.
    pub n: i64,
    pub basis: Vec<HypFunction<F>>,
}

impl<F: Field> HypSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

enum Uniformizer {
    Infinity(i64),
    X,
    Y,
}

/// Branch data at a place: residue field, uniformizer and `x(t)`, `y(t)`.
struct Local<F: Field> {
    field: ExtField<F>,
    kind: Uniformizer,
    xs: Series<ExtField<F>>,
    ys: Series<ExtField<F>>,
}

#[derive(Clone, Debug)]
pub struct Hyperelliptic<F: Field> {
    pub field: F,
    pub f: Poly<F>,
}

impl<F: Field> Hyperelliptic<F> {
    pub fn new(field: F, f: Poly<F>) -> Result<Self> {
        let f = poly::trimmed(&field, f);
        if f.len() < 4 || !(f.len() - 1).is_multiple_of(2) || !field.is_one(f.last().unwrap()) {
            return Err(Error::InvalidInput("need a monic polynomial of even degree >= 4".into()));
        }
        if field.characteristic() == 2 {
            return Err(Error::InvalidInput("characteristic 2 is not supported".into()));
        }
        let g = poly::gcd(&field, &f, &poly::derivative(&field, &f));
        if g.len() > 1 {
            return Err(Error::InvalidInput("f is not squarefree".into()));
        }
        Ok(Hyperelliptic { field, f })
    }

    pub fn genus(&self) -> i64 {
        (self.f.len() as i64 - 1) / 2 - 1
    }

    fn half(&self) -> i64 {
        self.genus() + 1
    }

    /// Place with `x`-minimal polynomial `m` and `y = r(x)`.
    pub fn point(&self, m: Poly<F>, r: Poly<F>) -> Result<HypPlace<F>> {
        let k = &self.field;
        let m = poly::monic(k, &m);
        let r = poly::rem(k, &r, &m);
        let lhs = poly::rem(k, &poly::sub(k, &poly::mul(k, &r, &r), &self.f), &m);
        if !lhs.is_empty() {
            return Err(Error::InvalidInput("point is not on the curve".into()));
        }
        Ok(HypPlace::Point { m, r })
    }

    pub fn is_weierstrass(&self, p: &HypPlace<F>) -> bool {
        match p {
            HypPlace::Point { m, .. } => poly::rem(&self.field, &self.f, m).is_empty(),
            _ => false,
        }
    }

    /// Places over the same `x`-polynomial as `p` (its conjugate under `y -> -y`).
    fn places_over(&self, p: &HypPlace<F>) -> Vec<HypPlace<F>> {
        match p {
            HypPlace::Point { m, r } if !r.is_empty() => {
                vec![p.clone(), HypPlace::Point { m: m.clone(), r: poly::neg(&self.field, r) }]
            }
            _ => vec![p.clone()],
        }
    }

    fn rev_f(&self) -> Poly<F> {
        self.f.iter().rev().cloned().collect()
    }

    fn local(&self, p: &HypPlace<F>, len: usize) -> Local<F> {
        let k = &self.field;
        match p {
            HypPlace::InfPlus | HypPlace::InfMinus => {
                let l = ExtField::new_unchecked(k.clone(), poly::x(k));
                let rf: Vec<_> = self.rev_f().iter().map(|c| l.from_base(c)).collect();
                let h = vec![rf.iter().map(|c| l.neg(c)).collect(), vec![], vec![l.one()]];
                let s = series::newton_lift(&l, &h, &l.one(), len).expect("simple square root at infinity");
                let sign = if matches!(p, HypPlace::InfPlus) { 1 } else { -1 };
                Local { field: l, kind: Uniformizer::Infinity(sign), xs: Vec::new(), ys: s }
            }
            HypPlace::Point { m, r } => {
                let l = ExtField::new_unchecked(k.clone(), m.clone());
                let x0 = l.generator();
                let y0 = l.from_poly(r);
                if l.is_zero(&y0) {
                    self.weierstrass_local(l, x0, len)
                } else {
                    self.x_local(l, x0, y0, len)
                }
            }
            HypPlace::Conjugate { m } => {
                let (l, x0, y0) = self.conjugate_field(m);
                self.x_local(l, x0, y0, len)
            }
        }
    }

    fn shifted_f(&self, l: &ExtField<F>, x0: &Vec<F::Elem>) -> Poly<ExtField<F>> {
        let fl = poly::map::<F, ExtField<F>>(l, &self.f, |c| l.from_base(c));
        poly::compose(l, &fl, &[x0.clone(), l.one()])
    }

    fn x_local(&self, l: ExtField<F>, x0: Vec<F::Elem>, y0: Vec<F::Elem>, len: usize) -> Local<F> {
        let fs = self.shifted_f(&l, &x0);
        let h = vec![fs.iter().map(|c| l.neg(c)).collect(), vec![], vec![l.one()]];
        let ys = series::newton_lift(&l, &h, &y0, len).expect("simple root away from branch points");
        let mut xs = series::truncate(&l, vec![x0], len);
        if len > 1 {
            xs[1] = l.one();
        }
        Local { field: l, kind: Uniformizer::X, xs, ys }
    }

    fn weierstrass_local(&self, l: ExtField<F>, x0: Vec<F::Elem>, len: usize) -> Local<F> {
        // f(x0 + X) - t^2 = 0 for X(t), as a polynomial in z = X with t-series coefficients
        let fs = self.shifted_f(&l, &x0);
        let mut h: Vec<Vec<Vec<F::Elem>>> = fs.iter().map(|c| vec![c.clone()]).collect();
        h[0] = vec![l.zero(), l.zero(), l.neg(&l.one())];
        let big = series::newton_lift(&l, &h, &l.zero(), len).expect("f is squarefree");
        let mut xs = big;
        xs[0] = l.add(&xs[0], &x0);
        let mut ys = vec![l.zero(); len];
        if len > 1 {
            ys[1] = l.one();
        }
        Local { field: l, kind: Uniformizer::Y, xs, ys }
    }

    /// Simple extension `F(x0, y0)` for a place where `f(x0)` is not a square.
    fn conjugate_field(&self, m: &Poly<F>) -> (ExtField<F>, Vec<F::Elem>, Vec<F::Elem>) {
        let k = &self.field;
        let l1 = ExtField::new_unchecked(k.clone(), m.clone());
        let a = l1.from_poly(&self.f);
        let tower = ExtField::new_unchecked(l1.clone(), vec![l1.neg(&a), l1.zero(), l1.one()]);
        let d = m.len() - 1;
        let n = 2 * d;
        let flat = |e: &Vec<Vec<F::Elem>>| -> Vec<F::Elem> { e.iter().flat_map(|c| c.iter().cloned()).collect() };
        for c in 0..64i64 {
            for j in 0..d {
                let xj = l1.pow(&l1.generator(), j as u64);
                let gamma = tower.add(&tower.generator(), &tower.from_base(&l1.mul(&l1.from_i64(c), &xj)));
                let mut powers = Vec::with_capacity(n + 1);
                let mut cur = tower.one();
                for _ in 0..=n {
                    powers.push(flat(&cur));
                    cur = tower.mul(&cur, &gamma);
                }
                let a_mat: Vec<Vec<F::Elem>> = (0..n).map(|r| (0..n).map(|i| powers[i][r].clone()).collect()).collect();
                if linalg::rank(k, &a_mat, n) < n {
                    continue;
                }
                let sol = linalg::solve(k, &a_mat, &powers[n]).unwrap();
                let mut mu: Vec<F::Elem> = sol.iter().map(|x| k.neg(x)).collect();
                mu.push(k.one());
                let l = ExtField::new_unchecked(k.clone(), mu);
                let x0 = linalg::solve(k, &a_mat, &flat(&tower.from_base(&l1.generator()))).unwrap();
                let y0 = linalg::solve(k, &a_mat, &flat(&tower.generator())).unwrap();
                return (l, x0, y0);
            }
        }
        panic!("no primitive element found for a quadratic residue extension");
    }

    /// `a(x(t))` for a polynomial with coefficients in `F`.
    fn compose_series(&self, l: &ExtField<F>, a: &[F::Elem], xs: &[Vec<F::Elem>], len: usize) -> Series<ExtField<F>> {
        let mut acc = vec![l.zero(); len];
        for c in a.iter().rev() {
            acc = series::mul(l, &acc, xs, len);
            acc[0] = l.add(&acc[0], &l.from_base(c));
        }
        acc
    }

    /// Order of `p + q y` at a place (`None` for the zero function).
    pub fn ord_numerator(&self, place: &HypPlace<F>, p: &Poly<F>, q: &Poly<F>) -> Option<i64> {
        let k = &self.field;
        if p.is_empty() && q.is_empty() {
            return None;
        }
        let h = self.half();
        let n = (poly::deg_i(p)).max(poly::deg_i(q) + h);
        let bound = (3 * n + 2 * h + 8) as usize;
        let mut len = 16usize;
        loop {
            let loc = self.local(place, len);
            let l = &loc.field;
            let s = match loc.kind {
                Uniformizer::Infinity(sign) => {
                    let prev = poly::reverse(k, p, n as usize);
                    let qrev = if q.is_empty() { Vec::new() } else { poly::reverse(k, q, (n - h) as usize) };
                    let a: Vec<_> = series::truncate(l, prev.iter().map(|c| l.from_base(c)).collect(), len);
                    let b: Vec<_> = series::truncate(l, qrev.iter().map(|c| l.from_base(c)).collect(), len);
                    let mut bs = series::mul(l, &b, &loc.ys, len);
                    if sign < 0 {
                        bs = bs.iter().map(|c| l.neg(c)).collect();
                    }
                    series::add(l, &a, &bs)
                }
                _ => {
                    let a = self.compose_series(l, p, &loc.xs, len);
                    let b = self.compose_series(l, q, &loc.xs, len);
                    series::add(l, &a, &series::mul(l, &b, &loc.ys, len))
                }
            };
            if let Some(v) = series::valuation(l, &s) {
                let v = v as i64;
                return Some(match loc.kind {
                    Uniformizer::Infinity(_) => v - n,
                    _ => v,
                });
            }
            assert!(len <= bound, "valuation exceeds the degree bound");
            len *= 2;
        }
    }

    /// Order of a polynomial in `x` at a place.
    pub fn ord_poly(&self, place: &HypPlace<F>, a: &Poly<F>) -> i64 {
        self.ord_numerator(place, a, &Vec::new()).expect("nonzero polynomial")
    }

    /// Rows expressing `ord_P(p + q y) >= need` over `F`.
    fn conditions(&self, place: &HypPlace<F>, need: i64, n: i64, rows: &mut Vec<Vec<F::Elem>>) {
        let k = &self.field;
        let h = self.half();
        let nq = (n - h + 1).max(0) as usize;
        let np = (n + 1) as usize;
        match place {
            HypPlace::InfPlus | HypPlace::InfMinus => {
                // t^{-n}(p_rev +- q_rev S): first need + n coefficients vanish
                let count = (need + n).max(0) as usize;
                if count == 0 {
                    return;
                }
                let loc = self.local(place, count);
                let sign = if matches!(place, HypPlace::InfPlus) { 1 } else { -1 };
                for t in 0..count {
                    let mut row = vec![k.zero(); np + nq];
                    // p_i contributes t^{n-i}
                    if (t as i64) <= n {
                        row[(n - t as i64) as usize] = k.one();
                    }
                    // q_i contributes +- t^{n-h-i} S(t)
                    for (i, slot) in row[np..].iter_mut().enumerate() {
                        let shift = n - h - i as i64;
                        if shift >= 0 && (t as i64) >= shift {
                            let c = &loc.ys[t - shift as usize][0];
                            *slot = if sign > 0 { c.clone() } else { k.neg(c) };
                        }
                    }
                    rows.push(row);
                }
            }
            _ => {
                if need <= 0 {
                    return;
                }
                let len = need as usize;
                let loc = self.local(place, len);
                let l = &loc.field;
                let mut cols: Vec<Series<ExtField<F>>> = Vec::with_capacity(np + nq);
                let mut xp = series::truncate(l, vec![l.one()], len);
                for i in 0..np.max(nq) {
                    if i < np {
                        cols.push(xp.clone());
                    }
                    xp = series::mul(l, &xp, &loc.xs, len);
                }
                let mut xp = loc.ys.clone();
                for _ in 0..nq {
                    cols.push(xp.clone());
                    xp = series::mul(l, &xp, &loc.xs, len);
                }
                for t in 0..len {
                    for s in 0..l.ext_degree() {
                        rows.push(cols.iter().map(|c| c[t][s].clone()).collect());
                    }
                }
            }
        }
    }

    /// `ord_P` of the denominator `prod m^c`.
    fn ord_den(&self, place: &HypPlace<F>, den_parts: &[(Poly<F>, i64)]) -> i64 {
        let Some(m) = place.x_poly() else { return 0 };
        let w = if self.is_weierstrass(place) { 2 } else { 1 };
        den_parts.iter().filter(|(mm, _)| mm == m).map(|(_, c)| c * w).sum()
    }

    pub fn space(&self, d: &HypDivisor<F>) -> Result<HypSpace<F>> {
        let k = &self.field;
        let h = self.half();
        let mut den_parts: Vec<(Poly<F>, i64)> = Vec::new();
        for (p, c) in &d.terms {
            if *c <= 0 {
                continue;
            }
            if let Some(m) = p.x_poly() {
                let need = if self.is_weierstrass(p) { (c + 1) / 2 } else { *c };
                match den_parts.iter_mut().find(|(mm, _)| mm == m) {
                    Some(slot) => slot.1 = slot.1.max(need),
                    None => den_parts.push((m.clone(), need)),
                }
            }
        }
        let mut den = poly::one(k);
        for (m, c) in &den_parts {
            den = poly::mul(k, &den, &poly::pow(k, m, *c as u32));
        }
        let dd = poly::deg_i(&den);
        let mp = d.coeff(&HypPlace::InfPlus) + dd;
        let mm = d.coeff(&HypPlace::InfMinus) + dd;
        let n = mp.max(mm);
        if n < 0 || d.degree() < 0 {
            return Ok(HypSpace { den, n, basis: Vec::new() });
        }
        let np = (n + 1) as usize;
        let nq = (n - h + 1).max(0) as usize;
        let mut rows = Vec::new();
        self.conditions(&HypPlace::InfPlus, -mp, n, &mut rows);
        self.conditions(&HypPlace::InfMinus, -mm, n, &mut rows);
        let mut finite: Vec<HypPlace<F>> = Vec::new();
        for (p, _) in &d.terms {
            if p.x_poly().is_some() {
                for q in self.places_over(p) {
                    if !finite.contains(&q) {
                        finite.push(q);
                    }
                }
            }
        }
        for p in &finite {
            let need = self.ord_den(p, &den_parts) - d.coeff(p);
            self.conditions(p, need, n, &mut rows);
        }
        let basis = k
            .kernel(rows, np + nq)
            .into_iter()
            .map(|v| HypFunction {
                p: poly::trimmed(k, v[..np].to_vec()),
                q: poly::trimmed(k, v[np..].to_vec()),
                den: den.clone(),
            })
            .collect();
        Ok(HypSpace { den, n, basis })
    }

    pub fn dimension(&self, d: &HypDivisor<F>) -> Result<usize> {
        Ok(self.space(d)?.dim())
    }

    /// `p^2 - q^2 f`, whose degree counts the affine zeros of `p + q y`.
    pub fn norm(&self, p: &Poly<F>, q: &Poly<F>) -> Poly<F> {
        let k = &self.field;
        poly::sub(k, &poly::mul(k, p, p), &poly::mul(k, &poly::mul(k, q, q), &self.f))
    }

    /// Divisor of `g` restricted to `places`, with a check that no affine
    /// zero of the numerator lies outside them (norm degree count).
    pub fn divisor_on(&self, g: &HypFunction<F>, places: &[HypPlace<F>]) -> Result<HypDivisor<F>> {
        let k = &self.field;
        let mut all: Vec<HypPlace<F>> = vec![HypPlace::InfPlus, HypPlace::InfMinus];
        for p in places {
            for q in self.places_over(p) {
                if !all.contains(&q) {
                    all.push(q);
                }
            }
        }
        let mut den_parts: Vec<(Poly<F>, i64)> = Vec::new();
        let mut rest = g.den.clone();
        for p in &all {
            if let Some(m) = p.x_poly() {
                if den_parts.iter().any(|(mm, _)| mm == m) {
                    continue;
                }
                let mut c = 0;
                while rest.len() > 1 {
                    let (qq, r) = poly::divrem(k, &rest, m);
                    if !r.is_empty() {
                        break;
                    }
                    rest = qq;
                    c += 1;
                }
                den_parts.push((m.clone(), c));
            }
        }
        if rest.len() > 1 {
            return Err(Error::InvalidInput("denominator has factors outside the given places".into()));
        }
        let mut out = HypDivisor::zero();
        let mut affine_zeros = 0i64;
        let dd = poly::deg_i(&g.den);
        for p in &all {
            let v = self
                .ord_numerator(p, &g.p, &g.q)
                .ok_or_else(|| Error::InvalidInput("zero function".into()))?;
            let vd = match p {
                HypPlace::InfPlus | HypPlace::InfMinus => -dd,
                _ => self.ord_den(p, &den_parts),
            };
            if p.x_poly().is_some() {
                affine_zeros += v * p.degree() as i64;
            }
            out.add_term(p.clone(), v - vd);
        }
        let nd = poly::deg_i(&self.norm(&g.p, &g.q));
        if affine_zeros != nd {
            return Err(Error::Inconsistent(format!(
                "numerator has {nd} affine zeros but {affine_zeros} lie on the given places"
            )));
        }
        if out.degree() != 0 {
            return Err(Error::Inconsistent("principal divisor of nonzero degree".into()));
        }
        Ok(out)
    }

    /// Principality of a degree-0 divisor; the witness divisor is recomputed.
    pub fn is_principal(&self, d: &HypDivisor<F>) -> Result<(bool, Option<HypFunction<F>>)> {
        if d.degree() != 0 {
            return Err(Error::InvalidInput("principality needs a degree-0 divisor".into()));
        }
        let s = self.space(d)?;
        let Some(g) = s.basis.into_iter().next() else {
            return Ok((false, None));
        };
        let places: Vec<_> = d.terms.iter().map(|(p, _)| p.clone()).collect();
        let div = self.divisor_on(&g, &places)?;
        if !div.same_as(&d.scale(-1)) {
            return Err(Error::Inconsistent("witness divisor differs from -D".into()));
        }
        Ok((true, Some(g)))
    }

    /// `(g - 1)(inf+ + inf-)`, the divisor of `dx / y`.
    pub fn canonical_divisor(&self) -> HypDivisor<F> {
        let c = self.genus() - 1;
        HypDivisor::from_terms(&[(HypPlace::InfPlus, c), (HypPlace::InfMinus, c)])
    }
}

impl Hyperelliptic<PrimeField> {
    /// All places of degree at most `n`.
    pub fn places_up_to(&self, n: usize) -> Vec<HypPlace<PrimeField>> {
        let k = self.field;
        let mut out = vec![HypPlace::InfPlus, HypPlace::InfMinus];
        for d in 1..=n {
            for m in crate::curve::model::irreducibles(&k, d) {
                let l = ExtField::finite(k, m.clone());
                let a = l.from_poly(&self.f);
                if l.is_zero(&a) {
                    out.push(HypPlace::Point { m, r: Vec::new() });
                    continue;
                }
                match l.sqrt(&a) {
                    Some(r) => {
                        for rr in [r.clone(), l.neg(&r)] {
                            out.push(HypPlace::Point { m: m.clone(), r: poly::trimmed(&k, rr) });
                        }
                    }
                    None if 2 * d <= n => out.push(HypPlace::Conjugate { m }),
                    None => {}
                }
            }
        }
        out
    }

    /// `#C(F_{p^k})` for `k = 1..=n` by counting square classes of `f`.
    pub fn point_counts(&self, n: usize) -> Vec<u64> {
        let p = self.field.p();
        (1..=n)
            .map(|k| {
                let l = crate::algebra::ext::Fq::canonical(p, k).expect("field of size p^k");
                let fl: Vec<Vec<u64>> = self.f.iter().map(|c| l.from_base(c)).collect();
                let total: i64 = (0..l.order_u64().unwrap())
                    .map(|i| {
                        let x = l.element(i);
                        1 + l.legendre(&poly::eval(&l, &fl, &x)) as i64
                    })
                    .sum();
                (total + 2) as u64
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, Rationals};
    use crate::data;

    fn octic_fp(p: u64) -> Hyperelliptic<PrimeField> {
        let k = PrimeField::new(p).unwrap();
        let f = data::octic().iter().map(|c| k.from_i64(*c)).collect();
        Hyperelliptic::new(k, f).unwrap()
    }

    #[test]
    fn place_counts_match_point_counts() {
        let c = octic_fp(3);
        let places = c.places_up_to(3);
        let counts = c.point_counts(3);
        for k in 1..=3usize {
            let n: usize = places.iter().filter(|p| k % p.degree() == 0).map(|p| p.degree()).sum();
            assert_eq!(n as u64, counts[k - 1], "k = {k}");
        }
    }

    #[test]
    fn riemann_roch_on_small_divisors_mod_3() {
        let c = octic_fp(3);
        let g = c.genus();
        let places = c.places_up_to(2);
        let kd = c.canonical_divisor();
        assert_eq!(kd.degree(), 2 * g - 2);
        assert_eq!(c.dimension(&kd).unwrap() as i64, g);
        for (i, p) in places.iter().enumerate() {
            for q in &places[i..] {
                for (a, b) in [(1, 1), (2, -1), (3, 1), (-1, 3)] {
                    let d = HypDivisor::from_terms(&[(p.clone(), a), (q.clone(), b)]);
                    let l = c.dimension(&d).unwrap() as i64;
                    let lk = c.dimension(&kd.sub(&d)).unwrap() as i64;
                    assert_eq!(l - lk, d.degree() - g + 1, "{d:?}");
                }
            }
        }
    }

    #[test]
    fn octic_over_q_divisor_of_x() {
        let k = Rationals;
        let f: Vec<_> = data::octic().iter().map(|c| rat(*c)).collect();
        let c = Hyperelliptic::new(k, f).unwrap();
        let p0 = c.point(vec![rat(0), rat(1)], vec![rat(-1)]).unwrap();
        let p1 = c.point(vec![rat(0), rat(1)], vec![rat(1)]).unwrap();
        // div(x) = (0,1) + (0,-1) - inf+ - inf-
        let d = HypDivisor::from_terms(&[(p0, -1), (p1, -1), (HypPlace::InfPlus, 1), (HypPlace::InfMinus, 1)]);
        let (ok, g) = c.is_principal(&d).unwrap();
        assert!(ok);
        assert!(g.is_some());
    }
}
