use std::fmt;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::algebra::{CentralElement, GroupAlgebraElement, GroupAlgebraMatrix};
use crate::arith::{binomial, subset_rank, subsets, CycloNum, Matrix, Rational};
use crate::error::{arg, Result};
use crate::groups::Group;

/// An element of the reduced exterior power ⋀^r of A^k, stored on the
/// split side: per χ, coordinates in ∧^{rχ(1)} E^{kχ(1)} with respect to
/// the lexicographic basis of (rχ(1))-subsets of the index set (i, j),
/// j fast within i.
#[derive(Clone, PartialEq)]
pub struct ExteriorElement {
    group: Group,
    rank: usize,
    degree: usize,
    coords: Vec<Vec<CycloNum>>,
}

/// An element of ⋀^s of Hom_A(A^k, A), stored with the same conventions.
#[derive(Clone, PartialEq)]
pub struct HomWedge {
    inner: ExteriorElement,
}

impl ExteriorElement {
    pub fn zero(group: &Group, rank: usize, degree: usize) -> Result<ExteriorElement> {
        if degree > rank {
            return arg(format!("wedge degree {degree} exceeds rank {rank}"));
        }
        let coords = group
            .degrees()
            .iter()
            .map(|&n| vec![CycloNum::zero(); binomial(rank * n, degree * n)])
            .collect();
        Ok(ExteriorElement {
            group: group.clone(),
            rank,
            degree,
            coords,
        })
    }

    pub fn from_coords(
        group: &Group,
        rank: usize,
        degree: usize,
        coords: Vec<Vec<CycloNum>>,
    ) -> Result<ExteriorElement> {
        let z = Self::zero(group, rank, degree)?;
        if coords.len() != z.coords.len()
            || coords.iter().zip(&z.coords).any(|(a, b)| a.len() != b.len())
        {
            return arg("coordinate vector lengths do not match the wedge dimensions");
        }
        Ok(ExteriorElement { coords, ..z })
    }

    /// The top wedge of the standard basis of A^k (coordinate 1 everywhere).
    pub fn top(group: &Group, rank: usize) -> ExteriorElement {
        ExteriorElement {
            group: group.clone(),
            rank,
            degree: rank,
            coords: vec![vec![CycloNum::one()]; group.num_irreps()],
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coords(&self) -> &[Vec<CycloNum>] {
        &self.coords
    }

    pub fn component(&self, chi: usize) -> &[CycloNum] {
        &self.coords[chi]
    }

    /// (ambient dimension, wedge degree) of the χ-component.
    pub fn component_dims(&self, chi: usize) -> (usize, usize) {
        let n = self.group.irreps()[chi].degree();
        (self.rank * n, self.degree * n)
    }

    /// Index subsets labelling the χ-coordinates.
    pub fn legend(&self, chi: usize) -> Vec<Vec<usize>> {
        let (n, p) = self.component_dims(chi);
        subsets(n, p)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().flatten().all(|c| c.is_zero())
    }

    pub fn component_is_zero(&self, chi: usize) -> bool {
        self.coords[chi].iter().all(|c| c.is_zero())
    }

    fn check_compatible(&self, o: &ExteriorElement) -> Result<()> {
        if self.group != o.group || self.rank != o.rank || self.degree != o.degree {
            return arg("exterior elements live in different wedge powers");
        }
        Ok(())
    }

    fn zip(&self, o: &ExteriorElement, f: impl Fn(&CycloNum, &CycloNum) -> CycloNum) -> Result<ExteriorElement> {
        self.check_compatible(o)?;
        let coords = self
            .coords
            .iter()
            .zip(&o.coords)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
            .collect();
        Ok(ExteriorElement {
            coords,
            ..self.clone()
        })
    }

    pub fn add(&self, o: &ExteriorElement) -> Result<ExteriorElement> {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &ExteriorElement) -> Result<ExteriorElement> {
        self.zip(o, |a, b| a - b)
    }

    pub fn neg(&self) -> ExteriorElement {
        ExteriorElement {
            coords: self.coords.iter().map(|c| c.iter().map(|x| -x).collect()).collect(),
            ..self.clone()
        }
    }

    /// Action of the centre: the χ-component is multiplied by x_χ.
    pub fn scale(&self, x: &CentralElement) -> Result<ExteriorElement> {
        if x.group() != &self.group {
            return arg("central element belongs to a different group");
        }
        let coords = self
            .coords
            .iter()
            .zip(x.values())
            .map(|(c, v)| c.iter().map(|a| a * v).collect())
            .collect();
        Ok(ExteriorElement {
            coords,
            ..self.clone()
        })
    }

    /// e_χ·x.
    pub fn project(&self, chi: usize) -> ExteriorElement {
        let mut out = self.clone();
        for (c, comp) in out.coords.iter_mut().enumerate() {
            if c != chi {
                comp.iter_mut().for_each(|x| *x = CycloNum::zero());
            }
        }
        out
    }

    /// The central element with these values, when every component is
    /// one-dimensional (degree 0 or degree = rank).
    pub fn as_central(&self) -> Option<CentralElement> {
        if self.coords.iter().any(|c| c.len() != 1) {
            return None;
        }
        CentralElement::from_values(&self.group, self.coords.iter().map(|c| c[0].clone()).collect()).ok()
    }
}

impl HomWedge {
    pub fn from_coords(group: &Group, rank: usize, degree: usize, coords: Vec<Vec<CycloNum>>) -> Result<HomWedge> {
        Ok(HomWedge {
            inner: ExteriorElement::from_coords(group, rank, degree, coords)?,
        })
    }

    /// The top wedge of the dual standard basis.
    pub fn top(group: &Group, rank: usize) -> HomWedge {
        HomWedge {
            inner: ExteriorElement::top(group, rank),
        }
    }

    pub fn group(&self) -> &Group {
        &self.inner.group
    }

    pub fn rank(&self) -> usize {
        self.inner.rank
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn coords(&self) -> &[Vec<CycloNum>] {
        &self.inner.coords
    }

    pub fn component(&self, chi: usize) -> &[CycloNum] {
        &self.inner.coords[chi]
    }

    pub fn legend(&self, chi: usize) -> Vec<Vec<usize>> {
        self.inner.legend(chi)
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn scale(&self, x: &CentralElement) -> Result<HomWedge> {
        Ok(HomWedge {
            inner: self.inner.scale(x)?,
        })
    }
}

fn vectors_matrix(
    group: &Group,
    k: usize,
    items: &[Vec<GroupAlgebraElement<Rational>>],
) -> Result<GroupAlgebraMatrix<Rational>> {
    if items.iter().any(|v| v.len() != k) {
        return arg(format!("every vector must have {k} entries"));
    }
    if items.iter().flatten().any(|x| x.group() != group) {
        return arg("entries belong to a different group");
    }
    let entries = items.iter().flatten().cloned().collect();
    GroupAlgebraMatrix::new(group, items.len(), k, entries)
}

/// Maximal minors along the columns (rows = vectors) or rows (columns =
/// vectors) of a split matrix.
fn maximal_minors(m: &Matrix<CycloNum>, vectors_are_rows: bool) -> Vec<CycloNum> {
    let (p, n) = if vectors_are_rows { (m.rows(), m.cols()) } else { (m.cols(), m.rows()) };
    if p == 0 {
        return vec![CycloNum::one()];
    }
    if m.rank() < p {
        return vec![CycloNum::zero(); binomial(n, p)];
    }
    let all: Vec<usize> = (0..p).collect();
    subsets(n, p)
        .par_iter()
        .map(|s| {
            if vectors_are_rows {
                m.select(&all, s).det()
            } else {
                m.select(s, &all).det()
            }
        })
        .collect()
}

/// ∧_i ∧_j v*_j ⊗ m_i: per χ the wedge of the χ(1) row slices of each
/// split element, element-major.
pub fn wedge_elements(
    group: &Group,
    k: usize,
    elements: &[Vec<GroupAlgebraElement<Rational>>],
) -> Result<ExteriorElement> {
    let r = elements.len();
    if r > k {
        return arg(format!("cannot wedge {r} elements of a rank-{k} module"));
    }
    let m = vectors_matrix(group, k, elements)?;
    let coords = (0..group.num_irreps())
        .map(|chi| maximal_minors(&m.split(chi), true))
        .collect();
    ExteriorElement::from_coords(group, k, r, coords)
}

/// ∧_i ∧_j v_j ⊗ φ_i for homs φ(m) = Σ_l m_l·f_l given as rows (f_1..f_k):
/// per χ the wedge of the χ(1) column slices of each split hom.
pub fn wedge_homs(group: &Group, k: usize, homs: &[Vec<GroupAlgebraElement<Rational>>]) -> Result<HomWedge> {
    let s = homs.len();
    if s > k {
        return arg(format!("cannot wedge {s} homs on a rank-{k} module"));
    }
    let m = vectors_matrix(group, k, homs)?.transpose();
    let coords = (0..group.num_irreps())
        .map(|chi| maximal_minors(&m.split(chi), false))
        .collect();
    HomWedge::from_coords(group, k, s, coords)
}

/// Apply a hom φ(m) = Σ_l m_l·f_l to an element.
pub fn apply_hom(
    hom: &[GroupAlgebraElement<Rational>],
    m: &[GroupAlgebraElement<Rational>],
) -> GroupAlgebraElement<Rational> {
    let g = hom[0].group();
    m.iter()
        .zip(hom)
        .fold(GroupAlgebraElement::zero(g), |acc, (x, f)| &acc + &(x * f))
}

/// Contraction of a p-vector by a q-covector on E^n.
///
/// Basis covectors are applied last-first, each removing its index from
/// the right end: e*_T ⌟ e_S = ±e_{S∖T}, with sign (−1) to the number of
/// pairs (t, u), t ∈ T, u ∈ S∖T, u > t. For q = p this is the plain
/// Cauchy–Binet pairing.
pub(crate) fn contract(n: usize, q: usize, h: &[CycloNum], p: usize, x: &[CycloNum]) -> Vec<CycloNum> {
    let mut out = vec![CycloNum::zero(); binomial(n, p - q)];
    let pos_subsets = subsets(p, q);
    for (si, s) in subsets(n, p).iter().enumerate() {
        if x[si].is_zero() {
            continue;
        }
        for pos in &pos_subsets {
            let t: Vec<usize> = pos.iter().map(|&i| s[i]).collect();
            let ht = &h[subset_rank(n, &t)];
            if ht.is_zero() {
                continue;
            }
            let rest: Vec<usize> = s.iter().copied().filter(|u| !t.contains(u)).collect();
            let inversions: usize = t.iter().map(|&ti| rest.iter().filter(|&&u| u > ti).count()).sum();
            let term = ht * &x[si];
            let slot = &mut out[subset_rank(n, &rest)];
            *slot = if inversions % 2 == 0 { &*slot + &term } else { &*slot - &term };
        }
    }
    out
}

/// The duality pairing ⋀^s Hom × ⋀^r → ⋀^{r−s}. For r = s the result has
/// one coordinate per χ, equal to Nrd of the Gram matrix (φ_b(m_a))_{a,b}.
pub fn pair(hw: &HomWedge, xe: &ExteriorElement) -> Result<ExteriorElement> {
    if hw.group() != xe.group() || hw.rank() != xe.rank() {
        return arg("pairing needs a common group and ambient rank");
    }
    let (s, r) = (hw.degree(), xe.degree());
    if s > r {
        return arg(format!("cannot pair a degree-{s} hom wedge with a degree-{r} element"));
    }
    let g = xe.group();
    let coords = (0..g.num_irreps())
        .into_par_iter()
        .map(|chi| {
            let d = g.irreps()[chi].degree();
            contract(xe.rank() * d, s * d, hw.component(chi), r * d, xe.component(chi))
        })
        .collect();
    ExteriorElement::from_coords(g, xe.rank(), r - s, coords)
}

impl fmt::Debug for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "∧^{} of rank {} over {}: [", self.degree, self.rank, self.group.name())?;
        for (chi, c) in self.coords.iter().enumerate() {
            let v: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "{}χ{chi}: ({})", if chi > 0 { "; " } else { "" }, v.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for HomWedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hom {:?}", self.inner)
    }
}

struct Component<'a> {
    dim: usize,
    wedge: usize,
    coords: &'a [CycloNum],
}

impl Serialize for Component<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Component", 4)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("wedge", &self.wedge)?;
        st.serialize_field("legend", &subsets(self.dim, self.wedge))?;
        st.serialize_field("coords", self.coords)?;
        st.end()
    }
}

impl Serialize for ExteriorElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let comps: Vec<Component> = (0..self.coords.len())
            .map(|chi| {
                let (dim, wedge) = self.component_dims(chi);
                Component {
                    dim,
                    wedge,
                    coords: &self.coords[chi],
                }
            })
            .collect();
        let mut st = s.serialize_struct("ExteriorElement", 4)?;
        st.serialize_field("group", &*self.group)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("components", &comps)?;
        st.end()
    }
}

impl Serialize for HomWedge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.inner.serialize(s)
    }
}
