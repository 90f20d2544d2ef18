//! Exact real-root counting and isolation by Sturm chains, plus the checks
//! built on them: real-rootedness, weak/strict interlacing of root
//! sequences, and nonnegativity on the whole real line.
//!
//! All decisions are made on exact rationals. Equal roots of two different
//! polynomials are detected through their gcd, never by comparing isolating
//! intervals.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::poly::int::IntPoly;
use crate::poly::UniPoly;

/// Signed remainder sequence `p0 = f`, `p1 = f'`, `p_{k+1} = -rem(p_{k-1}, p_k)`,
/// each member stored as a primitive integer polynomial (a positive multiple
/// of the rational one, which leaves every sign unchanged).
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(f: &UniPoly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p0 = IntPoly::primitive_of(f);
        let p1 = p0.derivative().primitive();
        let mut polys = vec![p0];
        if !p1.is_zero() {
            polys.push(p1);
        }
        while polys.len() >= 2 {
            let k = polys.len();
            let r = polys[k - 2].pseudo_rem(&polys[k - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(r.neg().primitive());
        }
        Ok(SturmChain { polys })
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Chain members as rational polynomials (up to positive scaling).
    pub fn polys(&self) -> Vec<UniPoly> {
        self.polys.iter().map(IntPoly::to_uni).collect()
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, v: &Rational) -> usize {
        Self::variations(self.polys.iter().map(|p| p.sign_at(v)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.polys.iter().map(|p| p.sign_at_infinity(positive)))
    }

    /// `V(lo) - V(hi)`: distinct roots in `(lo, hi]` when the chain was built
    /// from a squarefree polynomial. Missing bounds are infinite.
    pub fn count(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
        let vl = lo.map_or_else(|| self.variations_at_infinity(false), |v| self.variations_at(v));
        let vh = hi.map_or_else(|| self.variations_at_infinity(true), |v| self.variations_at(v));
        vl.saturating_sub(vh)
    }
}

/// Number of distinct real roots of `f` in `(lo, hi]`.
pub fn count_real_roots(f: &UniPoly, lo: Option<&Rational>, hi: Option<&Rational>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let (Some(l), Some(h)) = (lo, hi) {
        if l >= h {
            return Err(Error::EmptyInterval);
        }
    }
    let chain = SturmChain::new(&f.squarefree_part()?)?;
    Ok(chain.count(lo, hi))
}

/// True iff every complex root of `f` is real.
pub fn is_real_rooted(f: &UniPoly) -> Result<bool> {
    let q = f.squarefree_part()?;
    let chain = SturmChain::new(&q)?;
    Ok(chain.count(None, None) == q.degree().unwrap_or(0))
}

/// One isolated root: either pinned exactly (`lo == hi == exact`) or the
/// unique root of the squarefree part inside the open interval `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub exact: Option<Rational>,
}

impl RootInterval {
    fn exact(v: Rational) -> Self {
        RootInterval { lo: v.clone(), hi: v.clone(), exact: Some(v) }
    }

    fn open(lo: Rational, hi: Rational) -> Self {
        RootInterval { lo, hi, exact: None }
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    fn overlaps(&self, other: &RootInterval) -> bool {
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => a == b,
            (Some(a), None) => &other.lo < a && a < &other.hi,
            (None, Some(b)) => &self.lo < b && b < &self.hi,
            (None, None) => self.lo.clone().max(other.lo.clone()) < self.hi.clone().min(other.hi.clone()),
        }
    }

    /// Order of disjoint root locations.
    fn location_cmp(&self, other: &RootInterval) -> Ordering {
        self.lo.cmp(&other.lo).then_with(|| self.hi.cmp(&other.hi))
    }
}

impl Serialize for RootInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("lo", &self.lo.to_string())?;
        m.serialize_entry("hi", &self.hi.to_string())?;
        if let Some(e) = &self.exact {
            m.serialize_entry("exact", &e.to_string())?;
        }
        m.end()
    }
}

/// Sorted, pairwise disjoint root locations; one per distinct real root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RootIsolation {
    pub roots: Vec<RootInterval>,
}

impl RootIsolation {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// `1 + max |a_i / a_deg|`; every root has absolute value strictly below it.
pub fn cauchy_bound(f: &UniPoly) -> Rational {
    let Some(lc) = f.leading() else { return Rational::one() };
    let lc = lc.abs();
    let m = f.coeffs()[..f.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// Isolation machinery for one squarefree polynomial.
struct Isolator {
    ipoly: IntPoly,
    chain: SturmChain,
}

impl Isolator {
    fn new(squarefree: &UniPoly) -> Result<Self> {
        Ok(Isolator {
            ipoly: IntPoly::primitive_of(squarefree),
            chain: SturmChain::new(squarefree)?,
        })
    }

    fn sign(&self, v: &Rational) -> i8 {
        self.ipoly.sign_at(v)
    }

    /// Roots in the open interval `(lo, hi)`.
    fn open_count(&self, lo: &Rational, hi: &Rational) -> usize {
        let c = self.chain.count(Some(lo), Some(hi));
        c - usize::from(self.sign(hi) == 0 && c > 0)
    }

    fn isolate(&self) -> Vec<RootInterval> {
        let mut out = Vec::new();
        if self.ipoly.degree().unwrap_or(0) == 0 {
            return out;
        }
        let m = cauchy_bound(&self.ipoly.to_uni());
        let zero = Rational::zero();
        let mut stack = Vec::new();
        if self.sign(&zero) == 0 {
            out.push(RootInterval::exact(zero.clone()));
            stack.push((-m.clone(), zero.clone()));
            stack.push((zero, m));
        } else {
            stack.push((-m.clone(), m));
        }
        let half = Rational::new(1.into(), 2.into());
        while let Some((lo, hi)) = stack.pop() {
            match self.open_count(&lo, &hi) {
                0 => {}
                1 => {
                    let mid = (&lo + &hi) * &half;
                    if self.sign(&mid) == 0 {
                        out.push(RootInterval::exact(mid));
                    } else {
                        out.push(RootInterval::open(lo, hi));
                    }
                }
                _ => {
                    let mid = (&lo + &hi) * &half;
                    if self.sign(&mid) == 0 {
                        out.push(RootInterval::exact(mid.clone()));
                    }
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
        out.sort_by(RootInterval::location_cmp);
        out
    }

    /// Halves an open isolating interval, pinning the root if the midpoint hits it.
    fn bisect(&self, r: &mut RootInterval) {
        if r.is_exact() {
            return;
        }
        let mid = (&r.lo + &r.hi) / int(2);
        let sm = self.sign(&mid);
        if sm == 0 {
            *r = RootInterval::exact(mid);
            return;
        }
        let sl = self.sign(&r.lo);
        let left = if sl != 0 {
            sl != sm
        } else {
            self.open_count(&r.lo, &mid) == 1
        };
        if left {
            r.hi = mid;
        } else {
            r.lo = mid;
        }
    }

    fn contains_root(&self, r: &RootInterval) -> bool {
        match &r.exact {
            Some(v) => self.sign(v) == 0,
            None => self.open_count(&r.lo, &r.hi) > 0,
        }
    }
}

/// Isolates the distinct real roots of `f` by Sturm-count bisection of
/// `[-M, M]`, `M` the Cauchy bound; zero and any rational midpoint that is a
/// root are pinned exactly.
pub fn isolate_roots(f: &UniPoly) -> Result<RootIsolation> {
    let q = f.squarefree_part()?;
    Ok(RootIsolation {
        roots: Isolator::new(&q)?.isolate(),
    })
}

/// Narrows every open interval of `iso` below `width`.
pub fn refine(iso: &RootIsolation, f: &UniPoly, width: &Rational) -> Result<RootIsolation> {
    if !width.is_positive() {
        return Err(Error::Domain("refinement width must be positive".into()));
    }
    let isolator = Isolator::new(&f.squarefree_part()?)?;
    let mut roots = iso.roots.clone();
    for r in roots.iter_mut() {
        while !r.is_exact() && &r.width() >= width {
            isolator.bisect(r);
        }
    }
    Ok(RootIsolation { roots })
}

/// A point strictly between `a` and the root isolated by `b`, where `a`
/// lies to the left of every point of `b` (or to the right, `a_left = false`).
fn point_beside(iso: &Isolator, a: &Rational, b: &RootInterval, a_left: bool) -> Rational {
    let mut b = b.clone();
    loop {
        if let Some(v) = &b.exact {
            return (a + v) / int(2);
        }
        let (near, far) = if a_left { (&b.lo, &b.hi) } else { (&b.hi, &b.lo) };
        if near != a {
            return (a + near) / int(2);
        }
        let mid = (near + far) / int(2);
        if iso.sign(&mid) == 0 {
            return (a + &mid) / int(2);
        }
        let root_far = if a_left {
            iso.open_count(&mid, &b.hi) == 1
        } else {
            iso.open_count(&b.lo, &mid) == 1
        };
        if root_far {
            return mid;
        }
        if a_left {
            b.hi = mid;
        } else {
            b.lo = mid;
        }
    }
}

/// Sample points avoiding every real root of `f`: one left of all roots, one
/// strictly inside each gap between consecutive distinct roots, one right of
/// all roots. `f` is nonzero on each open gap, so its sign there is the sign
/// at the sample.
pub fn gap_points(f: &UniPoly) -> Result<Vec<Rational>> {
    let q = f.squarefree_part()?;
    let iso = Isolator::new(&q)?;
    let roots = iso.isolate();
    let (Some(first), Some(last)) = (roots.first(), roots.last()) else {
        return Ok(vec![Rational::zero()]);
    };
    let mut pts = vec![&first.lo - Rational::one()];
    for w in roots.windows(2) {
        let (l, r) = (&w[0], &w[1]);
        let pt = if l.hi < r.lo {
            (&l.hi + &r.lo) / int(2)
        } else if let Some(v) = &l.exact {
            point_beside(&iso, v, r, true)
        } else if let Some(v) = &r.exact {
            point_beside(&iso, v, l, false)
        } else {
            l.hi.clone()
        };
        pts.push(pt);
    }
    pts.push(&last.hi + Rational::one());
    Ok(pts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Owner {
    F,
    G,
    Both,
}

/// Distinct roots of `f` and `g` in ascending order with their multiplicities
/// `(in f, in g)`. Common roots come from `gcd(f, g)` and are never matched
/// by interval overlap.
fn merged_roots(f: &UniPoly, g: &UniPoly) -> Result<Vec<(usize, usize)>> {
    let (sf, sg) = (f.squarefree_part()?, g.squarefree_part()?);
    let common = sf.gcd(&sg)?;
    let parts = [
        (sf.div_exact(&common)?, Owner::F),
        (sg.div_exact(&common)?, Owner::G),
        (common, Owner::Both),
    ];
    let isolators = parts
        .iter()
        .map(|(p, _)| Isolator::new(p))
        .collect::<Result<Vec<_>>>()?;
    let mut elems: Vec<(RootInterval, usize)> = Vec::new();
    for (k, iso) in isolators.iter().enumerate() {
        elems.extend(iso.isolate().into_iter().map(|r| (r, k)));
    }
    // The three parts are pairwise coprime, so refinement separates them.
    loop {
        elems.sort_by(|a, b| a.0.location_cmp(&b.0));
        let clash = (0..elems.len()).find_map(|i| {
            (i + 1..elems.len())
                .take_while(|&j| elems[j].0.lo < elems[i].0.hi || elems[j].0.lo == elems[i].0.lo)
                .find(|&j| elems[i].0.overlaps(&elems[j].0))
                .map(|j| (i, j))
        });
        let Some((i, j)) = clash else { break };
        for k in [i, j] {
            let owner = elems[k].1;
            isolators[owner].bisect(&mut elems[k].0);
        }
    }
    let mult_table = |p: &UniPoly| -> Result<Vec<Isolator>> {
        p.squarefree_decomposition()?.iter().map(Isolator::new).collect()
    };
    let (mf, mg) = (mult_table(f)?, mult_table(g)?);
    let mult = |table: &[Isolator], r: &RootInterval| -> usize {
        table
            .iter()
            .position(|iso| iso.contains_root(r))
            .map_or(0, |k| k + 1)
    };
    Ok(elems
        .iter()
        .map(|(r, k)| match parts[*k].1 {
            Owner::F => (mult(&mf, r), 0),
            Owner::G => (0, mult(&mg, r)),
            Owner::Both => (mult(&mf, r), mult(&mg, r)),
        })
        .collect())
}

/// Whether `g` interlaces `f`: with roots of `f` ascending `a_1 <= ... <= a_p`
/// and of `g` ascending `b_1 <= ... <= b_q` (multiplicities expanded),
///
/// * `deg f = deg g`:     `b_1 <= a_1 <= b_2 <= a_2 <= ... <= b_q <= a_p`
/// * `deg f = deg g + 1`: `a_1 <= b_1 <= a_2 <= ... <= b_q <= a_p`
///
/// with every `<=` strict when `strict` is set. A zero polynomial on either
/// side interlaces trivially.
pub fn interlaces(g: &UniPoly, f: &UniPoly, strict: bool) -> Result<bool> {
    if f.is_zero() || g.is_zero() {
        return Ok(true);
    }
    let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
    if df < dg || df > dg + 1 {
        return Err(Error::DegreeGap(df.abs_diff(dg)));
    }
    if !is_real_rooted(f)? || !is_real_rooted(g)? {
        return Err(Error::NotRealRooted);
    }
    let merged = merged_roots(f, g)?;
    let expand = |pick: fn(&(usize, usize)) -> usize| -> Vec<usize> {
        merged
            .iter()
            .enumerate()
            .flat_map(|(pos, m)| std::iter::repeat_n(pos, pick(m)))
            .collect()
    };
    let a = expand(|m| m.0);
    let b = expand(|m| m.1);
    // Interleave into the required ascending chain.
    let chain: Vec<usize> = if df == dg {
        b.iter().zip(&a).flat_map(|(x, y)| [*x, *y]).collect()
    } else {
        let mut c = Vec::with_capacity(a.len() + b.len());
        for (i, x) in a.iter().enumerate() {
            c.push(*x);
            if let Some(y) = b.get(i) {
                c.push(*y);
            }
        }
        c
    };
    Ok(chain
        .windows(2)
        .all(|w| if strict { w[0] < w[1] } else { w[0] <= w[1] }))
}

/// True iff `p(x) >= 0` for every real `x`.
pub fn nonneg_on_reals(p: &UniPoly) -> bool {
    let Some(deg) = p.degree() else { return true };
    if !p.leading().unwrap().is_positive() || deg % 2 == 1 {
        return false;
    }
    let odd = p.squarefree_odd_part().expect("nonzero");
    SturmChain::new(&odd).expect("nonzero").count(None, None) == 0
}
