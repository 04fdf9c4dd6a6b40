//! Explicit finite categories.
//!
//! A [`FinCat`] stores its composition table densely over composable pairs:
//! for a morphism `f` and each `g` leaving `cod f` the composite `g∘f` is kept
//! in `comp[f]`, indexed by the position of `g` among the morphisms leaving
//! its domain.

mod build;
mod chains;
mod fiber;
mod json;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::limits::Limits;

pub use build::{factorization_category, point, product, product_projection, theta, theta_power};
pub use chains::{Chain, ChainLevels};
pub use fiber::{
    comma_fiber, cube_fiber, fiber_morphism, truncated_factorization_category, union_fiber,
    FiberObject, TraceFiber,
};
pub use json::{builtin, CategoryDocument, MorphismEntry};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

#[derive(Clone, Debug)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
    out_pos: Vec<usize>,
    comp: Vec<Vec<usize>>,
}

impl FinCat {
    /// Builds a category from its data and a composition function
    /// `compose(g, f) = g∘f`, called on every composable pair, then audits the
    /// identity and associativity laws.
    pub fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        limits: &Limits,
        mut compose: impl FnMut(usize, usize) -> Result<usize>,
    ) -> Result<Self> {
        if morphisms.len() > limits.max_morphisms {
            return Err(Error::budget(
                "category morphisms",
                morphisms.len() as u128,
                limits.max_morphisms as u128,
            ));
        }
        if identities.len() != objects.len() {
            return Err(Error::Input(
                "every object needs exactly one identity".into(),
            ));
        }
        for m in &morphisms {
            if m.dom >= objects.len() || m.cod >= objects.len() {
                return Err(Error::Input(format!(
                    "morphism `{}` has an undeclared endpoint",
                    m.name
                )));
            }
        }
        for (x, &id) in identities.iter().enumerate() {
            let m = morphisms.get(id).ok_or_else(|| {
                Error::Input(format!("identity of `{}` is not a morphism", objects[x]))
            })?;
            if m.dom != x || m.cod != x {
                return Err(Error::Input(format!(
                    "identity of `{}` is not an endomorphism of it",
                    objects[x]
                )));
            }
        }
        let mut outgoing = vec![Vec::new(); objects.len()];
        let mut incoming = vec![Vec::new(); objects.len()];
        let mut out_pos = vec![0; morphisms.len()];
        for (i, m) in morphisms.iter().enumerate() {
            out_pos[i] = outgoing[m.dom].len();
            outgoing[m.dom].push(i);
            incoming[m.cod].push(i);
        }
        let mut comp = Vec::with_capacity(morphisms.len());
        for f in 0..morphisms.len() {
            let row = outgoing[morphisms[f].cod]
                .iter()
                .map(|&g| {
                    let h = compose(g, f)?;
                    let ok = morphisms
                        .get(h)
                        .is_some_and(|m| m.dom == morphisms[f].dom && m.cod == morphisms[g].cod);
                    if ok {
                        Ok(h)
                    } else {
                        Err(Error::Input(format!(
                            "composite of `{}` after `{}` has the wrong endpoints",
                            morphisms[g].name, morphisms[f].name
                        )))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            comp.push(row);
        }
        let cat = FinCat {
            objects,
            morphisms,
            identities,
            outgoing,
            incoming,
            out_pos,
            comp,
        };
        cat.audit()?;
        Ok(cat)
    }

    /// Checks identity neutrality and associativity on every composable pair
    /// and triple.
    pub fn audit(&self) -> Result<()> {
        for f in 0..self.morphisms.len() {
            let m = &self.morphisms[f];
            if self.compose(self.identities[m.cod], f) != Some(f)
                || self.compose(f, self.identities[m.dom]) != Some(f)
            {
                return Err(Error::Input(format!(
                    "identities are not neutral for `{}`",
                    m.name
                )));
            }
            for &g in &self.outgoing[m.cod] {
                let gf = self.comp[f][self.out_pos[g]];
                for &h in &self.outgoing[self.morphisms[g].cod] {
                    let hg = self.comp[g][self.out_pos[h]];
                    if self.comp[gf][self.out_pos[h]] != self.comp[f][self.out_pos[hg]] {
                        return Err(Error::Input(format!(
                            "composition is not associative on `{}`, `{}`, `{}`",
                            self.morphisms[h].name, self.morphisms[g].name, m.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn dom(&self, f: usize) -> usize {
        self.morphisms[f].dom
    }

    pub fn cod(&self, f: usize) -> usize {
        self.morphisms[f].cod
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].dom] == f
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn outgoing(&self, x: usize) -> &[usize] {
        &self.outgoing[x]
    }

    pub fn incoming(&self, x: usize) -> &[usize] {
        &self.incoming[x]
    }

    pub fn hom(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.outgoing[x]
            .iter()
            .copied()
            .filter(move |&f| self.morphisms[f].cod == y)
    }

    /// `g∘f`, or `None` when `cod f ≠ dom g`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        if self.morphisms[f].cod != self.morphisms[g].dom {
            return None;
        }
        Some(self.comp[f][self.out_pos[g]])
    }

    /// All composable pairs `(g, f)` with their composite.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.morphisms.len()).flat_map(move |f| {
            self.outgoing[self.morphisms[f].cod]
                .iter()
                .map(move |&g| (g, f, self.comp[f][self.out_pos[g]]))
        })
    }

    /// Full subcategory on `objects` together with the inclusion's object and
    /// morphism maps.
    pub fn full_subcategory(&self, objects: &[usize]) -> Result<(FinCat, Vec<usize>, Vec<usize>)> {
        let mut local = HashMap::new();
        for (i, &x) in objects.iter().enumerate() {
            if x >= self.objects.len() || local.insert(x, i).is_some() {
                return Err(Error::Usage(
                    "subcategory objects must be distinct objects of the category".into(),
                ));
            }
        }
        let mut mor_map = Vec::new();
        let mut local_mor = HashMap::new();
        let mut morphisms = Vec::new();
        for (f, m) in self.morphisms.iter().enumerate() {
            if let (Some(&d), Some(&c)) = (local.get(&m.dom), local.get(&m.cod)) {
                local_mor.insert(f, morphisms.len());
                mor_map.push(f);
                morphisms.push(Morphism {
                    name: m.name.clone(),
                    dom: d,
                    cod: c,
                });
            }
        }
        let identities = objects
            .iter()
            .map(|&x| local_mor[&self.identities[x]])
            .collect();
        let names = objects.iter().map(|&x| self.objects[x].clone()).collect();
        let sub = FinCat::from_fn(names, morphisms, identities, &Limits::default(), |g, f| {
            Ok(local_mor[&self
                .compose(mor_map[g], mor_map[f])
                .expect("composable in parent")])
        })?;
        Ok((sub, objects.to_vec(), mor_map))
    }

    /// Finite poset as a thin category; `leq(i, j)` must be a partial order.
    pub fn poset(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<FinCat> {
        let n = names.len();
        let mut index = HashMap::new();
        let mut morphisms = Vec::new();
        for i in 0..n {
            if !leq(i, i) {
                return Err(Error::Input(format!(
                    "order is not reflexive at `{}`",
                    names[i]
                )));
            }
            for j in 0..n {
                if leq(i, j) {
                    if i != j && leq(j, i) {
                        return Err(Error::Input("order is not antisymmetric".into()));
                    }
                    index.insert((i, j), morphisms.len());
                    morphisms.push(Morphism {
                        name: format!("{}<={}", names[i], names[j]),
                        dom: i,
                        cod: j,
                    });
                }
            }
        }
        let identities = (0..n).map(|i| index[&(i, i)]).collect();
        let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.dom, m.cod)).collect();
        FinCat::from_fn(names, morphisms, identities, &Limits::default(), |g, f| {
            index
                .get(&(ends[f].0, ends[g].1))
                .copied()
                .ok_or_else(|| Error::Input("order is not transitive".into()))
        })
    }

    /// Whether some nonidentity `α: a → b` has a section `β` with `α∘β = 1_b`.
    pub fn has_nonidentity_retraction(&self) -> bool {
        (0..self.morphisms.len())
            .filter(|&a| !self.is_identity(a))
            .any(|a| {
                let (x, y) = (self.dom(a), self.cod(a));
                self.hom(y, x)
                    .any(|b| self.compose(a, b) == Some(self.identities[y]))
            })
    }

    /// Longest composable chain of nonidentity morphisms, capped at `cap`.
    pub fn max_nonidentity_chain(&self, cap: usize) -> ChainBound {
        let cap = cap.max(1);
        // chains of nonidentity arrows are paths in the object multigraph
        let n = self.objects.len();
        let mut succ = vec![Vec::new(); n];
        for (f, m) in self.morphisms.iter().enumerate() {
            if !self.is_identity(f) {
                if m.dom == m.cod {
                    return ChainBound::AtLeast(cap);
                }
                succ[m.dom].push(m.cod);
            }
        }
        // longest path ending anywhere, by DFS with cycle detection
        let mut state = vec![0u8; n];
        let mut longest = vec![0usize; n];
        fn visit(v: usize, succ: &[Vec<usize>], state: &mut [u8], longest: &mut [usize]) -> bool {
            state[v] = 1;
            let mut best = 0;
            for &w in &succ[v] {
                match state[w] {
                    1 => return false,
                    0 => {
                        if !visit(w, succ, state, longest) {
                            return false;
                        }
                    }
                    _ => {}
                }
                best = best.max(longest[w] + 1);
            }
            longest[v] = best;
            state[v] = 2;
            true
        }
        for v in 0..n {
            if state[v] == 0 && !visit(v, &succ, &mut state, &mut longest) {
                return ChainBound::AtLeast(cap);
            }
        }
        let m = longest.into_iter().max().unwrap_or(0);
        if m >= cap {
            ChainBound::AtLeast(cap)
        } else {
            ChainBound::Exact(m)
        }
    }

    /// Whether the object has a morphism from every object, each unique.
    pub fn is_terminal(&self, x: usize) -> bool {
        (0..self.objects.len()).all(|y| self.hom(y, x).count() == 1)
    }
}

/// Result of a capped search for long chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainBound {
    Exact(usize),
    AtLeast(usize),
}

/// A functor between finite categories, checked on construction.
#[derive(Clone, Debug)]
pub struct Functor<'a> {
    source: &'a FinCat,
    target: &'a FinCat,
    obj_map: Vec<usize>,
    mor_map: Vec<usize>,
}

impl<'a> Functor<'a> {
    pub fn new(
        source: &'a FinCat,
        target: &'a FinCat,
        obj_map: Vec<usize>,
        mor_map: Vec<usize>,
    ) -> Result<Self> {
        if obj_map.len() != source.object_count() || mor_map.len() != source.morphism_count() {
            return Err(Error::Input(
                "functor maps must cover every object and morphism".into(),
            ));
        }
        if obj_map.iter().any(|&y| y >= target.object_count())
            || mor_map.iter().any(|&g| g >= target.morphism_count())
        {
            return Err(Error::Input(
                "functor maps into nonexistent target cells".into(),
            ));
        }
        for (f, m) in source.morphisms().iter().enumerate() {
            let g = target.morphism(mor_map[f]);
            if g.dom != obj_map[m.dom] || g.cod != obj_map[m.cod] {
                return Err(Error::Input(format!(
                    "functor does not preserve endpoints of `{}`",
                    m.name
                )));
            }
        }
        for x in 0..source.object_count() {
            if mor_map[source.identity(x)] != target.identity(obj_map[x]) {
                return Err(Error::Input(format!(
                    "functor does not preserve the identity of `{}`",
                    source.objects()[x]
                )));
            }
        }
        for (g, f, gf) in source.composable_pairs() {
            if target.compose(mor_map[g], mor_map[f]) != Some(mor_map[gf]) {
                return Err(Error::Input(format!(
                    "functor does not preserve the composite of `{}` after `{}`",
                    source.morphism(g).name,
                    source.morphism(f).name
                )));
            }
        }
        Ok(Functor {
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    pub fn identity(cat: &'a FinCat) -> Self {
        Functor {
            source: cat,
            target: cat,
            obj_map: (0..cat.object_count()).collect(),
            mor_map: (0..cat.morphism_count()).collect(),
        }
    }

    /// Inclusion of a full subcategory built by [`FinCat::full_subcategory`].
    pub fn inclusion(
        sub: &'a FinCat,
        parent: &'a FinCat,
        obj_map: Vec<usize>,
        mor_map: Vec<usize>,
    ) -> Result<Self> {
        Self::new(sub, parent, obj_map, mor_map)
    }

    pub fn source(&self) -> &'a FinCat {
        self.source
    }

    pub fn target(&self) -> &'a FinCat {
        self.target
    }

    pub fn map_object(&self, x: usize) -> usize {
        self.obj_map[x]
    }

    pub fn map_morphism(&self, f: usize) -> usize {
        self.mor_map[f]
    }

    /// Whether the functor is a full embedding whose image is closed: every
    /// morphism of the target ending in the image starts in the image.
    ///
    /// Errors when the functor is not an injective-on-objects full embedding.
    pub fn is_closed_subcategory(&self) -> Result<bool> {
        let mut image = vec![None; self.target.object_count()];
        for (x, &y) in self.obj_map.iter().enumerate() {
            if image[y].replace(x).is_some() {
                return Err(Error::Usage("functor is not injective on objects".into()));
            }
        }
        for x in 0..self.source.object_count() {
            for y in 0..self.source.object_count() {
                let mut mapped: Vec<usize> =
                    self.source.hom(x, y).map(|f| self.mor_map[f]).collect();
                mapped.sort_unstable();
                mapped.dedup();
                let target_count = self.target.hom(self.obj_map[x], self.obj_map[y]).count();
                if mapped.len() != self.source.hom(x, y).count() || mapped.len() != target_count {
                    return Err(Error::Usage(format!(
                        "functor is not a full embedding on hom(`{}`, `{}`)",
                        self.source.objects()[x],
                        self.source.objects()[y]
                    )));
                }
            }
        }
        Ok(self
            .target
            .morphisms()
            .iter()
            .all(|m| image[m.cod].is_none() || image[m.dom].is_some()))
    }
}
