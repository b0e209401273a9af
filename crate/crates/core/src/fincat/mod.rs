//! Finite categories given by explicit composition tables, together with
//! functors, natural transformations, adjunctions and the comma-style
//! constructions everything else in this crate is built from.
//!
//! A category is stored as a total table: every composable pair has an entry,
//! so the identity and associativity laws can be checked exhaustively.
//! Posets may be given as cover relations and are expanded to tables.

mod adjoint;
mod classify;
mod comma;
pub mod parse;
pub mod shapes;

pub use adjoint::{find_adjoint, AdjointSide};
pub use classify::{classify, FunctorFlags};
pub use comma::{
    comma, comma_square, cone_category, finality_square, paste_horizontal, paste_vertical,
    pullback_square, slice, triple_fiber, CommaOutput,
};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Default cap on the number of objects a comma/fiber construction may enumerate.
pub const DEFAULT_SIZE_GUARD: usize = 100_000;

/// Identifier of an object. Equality of objects is equality of ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ObjId(pub String);

/// Identifier of a morphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MorId(pub String);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl ObjId {
    pub fn new(s: impl Into<String>) -> Self {
        ObjId(s.into())
    }
}

impl MorId {
    pub fn new(s: impl Into<String>) -> Self {
        MorId(s.into())
    }
}

/// Raw description of a category before validation.
///
/// Nonidentity morphisms and their pairwise composites are listed explicitly;
/// identities are implicit and named `id:<object>`. Alternatively a poset can
/// be described by its cover relations, which are expanded by transitive
/// closure.
#[derive(Clone, Debug, Default)]
pub struct RawCategory {
    pub name: String,
    pub objects: Vec<String>,
    /// (id, src, tgt) of each nonidentity morphism.
    pub morphisms: Vec<(String, String, String)>,
    /// (g, f, h) meaning g∘f = h.
    pub compositions: Vec<(String, String, String)>,
    /// Cover relations (x, y) meaning x < y; exclusive with `morphisms`.
    pub covers: Vec<(String, String)>,
}

/// Ill-formed input: the tables cannot even be interpreted.
/// Distinct from a law violation, which is a well-formed but invalid table.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum StructuralError {
    #[error("duplicate object id `{0}`")]
    DuplicateObject(String),
    #[error("duplicate morphism id `{0}`")]
    DuplicateMorphism(String),
    #[error("morphism id `{0}` uses the reserved identity prefix `id:`")]
    ReservedMorphismId(String),
    #[error("morphism `{mor}` refers to unknown object `{obj}`")]
    UnknownObject { mor: String, obj: String },
    #[error("composition entry refers to unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("cover relation refers to unknown object `{0}`")]
    UnknownCoverObject(String),
    #[error("category mixes explicit morphisms with poset cover relations")]
    MixedPosetAndMorphisms,
    #[error("cover relation `{0} < {1}` would create a cycle")]
    CoverCycle(String, String),
}

/// A violated category law, named concretely enough to re-check by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawViolation {
    /// A composite was declared for a pair with tgt(f) != src(g).
    NonComposablePair { g: MorId, f: MorId },
    /// No composite declared for a composable pair of nonidentity morphisms.
    MissingComposite { g: MorId, f: MorId },
    /// Declared composite has the wrong endpoints.
    CompositeTyping { g: MorId, f: MorId, composite: MorId },
    /// Conflicting table entries for the same pair.
    ConflictingComposite { g: MorId, f: MorId, first: MorId, second: MorId },
    /// id∘f != f or f∘id != f.
    IdentityLaw { mor: MorId },
    /// h∘(g∘f) != (h∘g)∘f; both evaluations are recorded.
    Associativity { h: MorId, g: MorId, f: MorId, left: MorId, right: MorId },
}

impl fmt::Display for LawViolation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawViolation::NonComposablePair { g, f } => {
                write!(out, "composite declared for non-composable pair ({g}, {f})")
            }
            LawViolation::MissingComposite { g, f } => {
                write!(out, "missing composite {g}∘{f}")
            }
            LawViolation::CompositeTyping { g, f, composite } => {
                write!(out, "composite {g}∘{f} = {composite} has wrong source or target")
            }
            LawViolation::ConflictingComposite { g, f, first, second } => {
                write!(out, "conflicting composites for {g}∘{f}: {first} vs {second}")
            }
            LawViolation::IdentityLaw { mor } => {
                write!(out, "identity law fails at {mor}")
            }
            LawViolation::Associativity { h, g, f, left, right } => {
                write!(out, "associativity fails on ({h}, {g}, {f}): {left} vs {right}")
            }
        }
    }
}

/// Result of checking a raw category against the laws.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<LawViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(out, "valid")
        } else {
            writeln!(out, "{} violation(s):", self.violations.len())?;
            for v in &self.violations {
                writeln!(out, "  {v}")?;
            }
            Ok(())
        }
    }
}

#[derive(Clone, Debug, Error)]
pub enum CatError {
    #[error("structural error: {0}")]
    Structural(#[from] StructuralError),
    #[error("category laws violated: {0}")]
    Laws(ValidationReport),
    #[error("{0}")]
    Mismatch(String),
    #[error("size guard exceeded: construction needs {needed} entries, guard is {guard}")]
    SizeGuard { needed: usize, guard: usize },
    #[error("unknown object `{0}`")]
    NoSuchObject(String),
    #[error("unknown morphism `{0}`")]
    NoSuchMorphism(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mor {
    pub(crate) id: MorId,
    pub(crate) src: usize,
    pub(crate) tgt: usize,
}

/// A finite category: objects, morphisms, identities, and a total composition
/// table on composable pairs. Immutable once built; all laws hold.
#[derive(Clone, Debug)]
pub struct FinCat {
    name: String,
    objects: Vec<ObjId>,
    obj_idx: HashMap<ObjId, usize>,
    mors: Vec<Mor>,
    mor_idx: HashMap<MorId, usize>,
    ident: Vec<usize>,
    comp: HashMap<(u32, u32), u32>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.mors == other.mors
            && self.ident == other.ident
            && self.comp == other.comp
    }
}
impl Eq for FinCat {}

pub fn identity_id(obj: &str) -> String {
    format!("id:{obj}")
}

impl FinCat {
    /// Validate a raw description. Structural problems abort the check;
    /// law violations are collected into the report.
    pub fn validate_raw(raw: &RawCategory) -> Result<ValidationReport, StructuralError> {
        let expanded = expand_raw(raw)?;
        Ok(check_laws(&expanded))
    }

    /// Build a category from a raw description, failing on any violation.
    pub fn from_raw(raw: &RawCategory) -> Result<FinCat, CatError> {
        let expanded = expand_raw(raw)?;
        let report = check_laws(&expanded);
        if !report.is_valid() {
            return Err(CatError::Laws(report));
        }
        Ok(expanded.into_cat())
    }

    /// Assemble a category that is already known to satisfy the laws
    /// (outputs of the constructions in this module). Debug builds re-check
    /// small instances.
    pub(crate) fn from_parts(
        name: String,
        objects: Vec<ObjId>,
        mors: Vec<Mor>,
        ident: Vec<usize>,
        comp: HashMap<(u32, u32), u32>,
    ) -> FinCat {
        let obj_idx = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), i))
            .collect();
        let mor_idx = mors
            .iter()
            .enumerate()
            .map(|(i, m)| (m.id.clone(), i))
            .collect();
        let cat = FinCat { name, objects, obj_idx, mors, mor_idx, ident, comp };
        debug_assert!(
            cat.mors.len() > 200 || cat.check_table().is_valid(),
            "internal construction produced an invalid category {:?}",
            cat.check_table()
        );
        cat
    }

    /// Re-check the laws on the built table.
    pub fn check_table(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (gi, g) in self.mors.iter().enumerate() {
            for (fi, f) in self.mors.iter().enumerate() {
                let composable = f.tgt == g.src;
                let entry = self.comp.get(&(gi as u32, fi as u32));
                match (composable, entry) {
                    (true, None) => violations.push(LawViolation::MissingComposite {
                        g: g.id.clone(),
                        f: f.id.clone(),
                    }),
                    (false, Some(_)) => violations.push(LawViolation::NonComposablePair {
                        g: g.id.clone(),
                        f: f.id.clone(),
                    }),
                    (true, Some(&h)) => {
                        let h = &self.mors[h as usize];
                        if h.src != f.src || h.tgt != g.tgt {
                            violations.push(LawViolation::CompositeTyping {
                                g: g.id.clone(),
                                f: f.id.clone(),
                                composite: h.id.clone(),
                            });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for (fi, f) in self.mors.iter().enumerate() {
            let lid = self.ident[f.tgt] as u32;
            let rid = self.ident[f.src] as u32;
            if self.comp.get(&(lid, fi as u32)) != Some(&(fi as u32))
                || self.comp.get(&(fi as u32, rid)) != Some(&(fi as u32))
            {
                violations.push(LawViolation::IdentityLaw { mor: f.id.clone() });
            }
        }
        for (hi, h) in self.mors.iter().enumerate() {
            for (gi, g) in self.mors.iter().enumerate() {
                if g.tgt != h.src {
                    continue;
                }
                let hg = match self.comp.get(&(hi as u32, gi as u32)) {
                    Some(&x) => x,
                    None => continue,
                };
                for (fi, f) in self.mors.iter().enumerate() {
                    if f.tgt != g.src {
                        continue;
                    }
                    let gf = match self.comp.get(&(gi as u32, fi as u32)) {
                        Some(&x) => x,
                        None => continue,
                    };
                    let left = self.comp.get(&(hg, fi as u32));
                    let right = self.comp.get(&(hi as u32, gf));
                    if let (Some(&l), Some(&r)) = (left, right) {
                        if l != r {
                            violations.push(LawViolation::Associativity {
                                h: h.id.clone(),
                                g: g.id.clone(),
                                f: f.id.clone(),
                                left: self.mors[l as usize].id.clone(),
                                right: self.mors[r as usize].id.clone(),
                            });
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.mors.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = usize> {
        0..self.objects.len()
    }

    pub fn morphisms(&self) -> impl Iterator<Item = usize> {
        0..self.mors.len()
    }

    pub fn object_id(&self, o: usize) -> &ObjId {
        &self.objects[o]
    }

    pub fn morphism_id(&self, m: usize) -> &MorId {
        &self.mors[m].id
    }

    pub fn object_index(&self, id: &ObjId) -> Option<usize> {
        self.obj_idx.get(id).copied()
    }

    pub fn morphism_index(&self, id: &MorId) -> Option<usize> {
        self.mor_idx.get(id).copied()
    }

    pub fn src(&self, m: usize) -> usize {
        self.mors[m].src
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.mors[m].tgt
    }

    pub fn identity_of(&self, o: usize) -> usize {
        self.ident[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.ident[self.mors[m].src] == m
    }

    /// g∘f when tgt(f) = src(g).
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp.get(&(g as u32, f as u32)).map(|&h| h as usize)
    }

    /// All morphisms x → y, in insertion order.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        self.morphisms()
            .filter(|&m| self.mors[m].src == x && self.mors[m].tgt == y)
            .collect()
    }

    pub fn is_iso(&self, m: usize) -> bool {
        let (s, t) = (self.src(m), self.tgt(m));
        self.hom(t, s).iter().any(|&n| {
            self.compose(n, m) == Some(self.ident[s]) && self.compose(m, n) == Some(self.ident[t])
        })
    }

    pub fn initial_objects(&self) -> Vec<usize> {
        self.objects()
            .filter(|&i| self.objects().all(|x| self.hom(i, x).len() == 1))
            .collect()
    }

    pub fn terminal_objects(&self) -> Vec<usize> {
        self.objects()
            .filter(|&t| self.objects().all(|x| self.hom(x, t).len() == 1))
            .collect()
    }

    /// Connected components of the underlying undirected graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.objects.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for m in self.morphisms() {
                    let (s, t) = (self.src(m), self.tgt(m));
                    for (a, b) in [(s, t), (t, s)] {
                        if a == x && !seen[b] {
                            seen[b] = true;
                            comp.push(b);
                            stack.push(b);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// No nonidentity endomorphisms and no directed cycles through distinct
    /// objects; guarantees a finite-dimensional nerve.
    pub fn is_loop_free(&self) -> bool {
        for m in self.morphisms() {
            if !self.is_identity(m) && self.src(m) == self.tgt(m) {
                return false;
            }
        }
        // cycle detection on the object graph of nonidentity morphisms
        let n = self.objects.len();
        let mut adj = vec![Vec::new(); n];
        for m in self.morphisms() {
            if !self.is_identity(m) {
                adj[self.src(m)].push(self.tgt(m));
            }
        }
        let mut state = vec![0u8; n]; // 0 unseen, 1 on stack, 2 done
        fn dfs(v: usize, adj: &[Vec<usize>], state: &mut [u8]) -> bool {
            state[v] = 1;
            for &w in &adj[v] {
                match state[w] {
                    0 => {
                        if !dfs(w, adj, state) {
                            return false;
                        }
                    }
                    1 => return false,
                    _ => {}
                }
            }
            state[v] = 2;
            true
        }
        (0..n).all(|v| state[v] != 0 || dfs(v, &adj, &mut state))
    }

    /// Opposite category: same ids, sources and targets swapped.
    pub fn op(&self) -> FinCat {
        let mors = self
            .mors
            .iter()
            .map(|m| Mor { id: m.id.clone(), src: m.tgt, tgt: m.src })
            .collect();
        let comp = self.comp.iter().map(|(&(g, f), &h)| ((f, g), h)).collect();
        FinCat::from_parts(
            format!("{}^op", self.name),
            self.objects.clone(),
            mors,
            self.ident.clone(),
            comp,
        )
    }
}

/// Product category A×B with objects `(a,b)` and morphisms `(f,g)`.
pub fn product(a: &FinCat, b: &FinCat) -> FinCat {
    let objects: Vec<ObjId> = a
        .objects()
        .flat_map(|i| {
            b.objects()
                .map(move |j| ObjId(format!("({},{})", a.object_id(i), b.object_id(j))))
        })
        .collect();
    let oidx = |i: usize, j: usize| i * b.object_count() + j;
    let mut mors = Vec::new();
    let midx = |i: usize, j: usize| i * b.morphism_count() + j;
    for f in a.morphisms() {
        for g in b.morphisms() {
            mors.push(Mor {
                id: MorId(format!("({},{})", a.morphism_id(f), b.morphism_id(g))),
                src: oidx(a.src(f), b.src(g)),
                tgt: oidx(a.tgt(f), b.tgt(g)),
            });
        }
    }
    let ident = (0..a.object_count())
        .flat_map(|i| (0..b.object_count()).map(move |j| (i, j)))
        .map(|(i, j)| midx(a.identity_of(i), b.identity_of(j)))
        .collect();
    let mut comp = HashMap::new();
    for f1 in a.morphisms() {
        for g1 in b.morphisms() {
            for f2 in a.morphisms() {
                for g2 in b.morphisms() {
                    if let (Some(fc), Some(gc)) = (a.compose(f2, f1), b.compose(g2, g1)) {
                        comp.insert(
                            (midx(f2, g2) as u32, midx(f1, g1) as u32),
                            midx(fc, gc) as u32,
                        );
                    }
                }
            }
        }
    }
    FinCat::from_parts(format!("{}x{}", a.name, b.name), objects, mors, ident, comp)
}

/// First projection A×B → A (`which = 0`) or second (`which = 1`).
pub fn projection(a: &FinCat, b: &FinCat, which: usize) -> Functor {
    let prod = product(a, b);
    let (obj_map, mor_map): (Vec<usize>, Vec<usize>) = if which == 0 {
        (
            prod.objects().map(|o| o / b.object_count()).collect(),
            prod.morphisms().map(|m| m / b.morphism_count()).collect(),
        )
    } else {
        (
            prod.objects().map(|o| o % b.object_count()).collect(),
            prod.morphisms().map(|m| m % b.morphism_count()).collect(),
        )
    };
    Functor::new_unchecked(prod, if which == 0 { a.clone() } else { b.clone() }, obj_map, mor_map)
}

/// Diagonal functor A → A×A.
pub fn diagonal(a: &FinCat) -> Functor {
    let prod = product(a, a);
    let n = a.object_count();
    let nm = a.morphism_count();
    let obj_map = a.objects().map(|o| o * n + o).collect();
    let mor_map = a.morphisms().map(|m| m * nm + m).collect();
    Functor::new_unchecked(a.clone(), prod, obj_map, mor_map)
}

/// Disjoint union A ⊔ B with objects tagged `L.x` / `R.x`.
pub fn coproduct(a: &FinCat, b: &FinCat) -> (FinCat, Functor, Functor) {
    let mut objects: Vec<ObjId> = a
        .objects()
        .map(|i| ObjId(format!("L.{}", a.object_id(i))))
        .collect();
    objects.extend(b.objects().map(|i| ObjId(format!("R.{}", b.object_id(i)))));
    let mut mors: Vec<Mor> = a
        .morphisms()
        .map(|m| Mor {
            id: MorId(format!("L.{}", a.morphism_id(m))),
            src: a.src(m),
            tgt: a.tgt(m),
        })
        .collect();
    let (no, nm) = (a.object_count(), a.morphism_count());
    mors.extend(b.morphisms().map(|m| Mor {
        id: MorId(format!("R.{}", b.morphism_id(m))),
        src: b.src(m) + no,
        tgt: b.tgt(m) + no,
    }));
    let mut ident: Vec<usize> = (0..no).map(|o| a.identity_of(o)).collect();
    ident.extend((0..b.object_count()).map(|o| b.identity_of(o) + nm));
    let mut comp: HashMap<(u32, u32), u32> = a.comp.clone();
    for (&(g, f), &h) in &b.comp {
        comp.insert((g + nm as u32, f + nm as u32), h + nm as u32);
    }
    let cat = FinCat::from_parts(format!("{}+{}", a.name, b.name), objects, mors, ident, comp);
    let inl = Functor::new_unchecked(
        a.clone(),
        cat.clone(),
        a.objects().collect(),
        a.morphisms().collect(),
    );
    let inr = Functor::new_unchecked(
        b.clone(),
        cat.clone(),
        b.objects().map(|o| o + no).collect(),
        b.morphisms().map(|m| m + nm).collect(),
    );
    (cat, inl, inr)
}

/// Full subcategory on the given objects, with its inclusion.
pub fn full_subcategory(cat: &FinCat, objs: &[usize]) -> (FinCat, Functor) {
    let mut objset = vec![usize::MAX; cat.object_count()];
    for (new, &old) in objs.iter().enumerate() {
        objset[old] = new;
    }
    let keep: Vec<usize> = cat
        .morphisms()
        .filter(|&m| objset[cat.src(m)] != usize::MAX && objset[cat.tgt(m)] != usize::MAX)
        .collect();
    let mut morset = vec![usize::MAX; cat.morphism_count()];
    for (new, &old) in keep.iter().enumerate() {
        morset[old] = new;
    }
    let objects = objs.iter().map(|&o| cat.object_id(o).clone()).collect();
    let mors = keep
        .iter()
        .map(|&m| Mor {
            id: cat.morphism_id(m).clone(),
            src: objset[cat.src(m)],
            tgt: objset[cat.tgt(m)],
        })
        .collect();
    let ident = objs.iter().map(|&o| morset[cat.identity_of(o)]).collect();
    let mut comp = HashMap::new();
    for &g in &keep {
        for &f in &keep {
            if let Some(h) = cat.compose(g, f) {
                comp.insert((morset[g] as u32, morset[f] as u32), morset[h] as u32);
            }
        }
    }
    let sub = FinCat::from_parts(format!("{}|full", cat.name), objects, mors, ident, comp);
    let incl = Functor::new_unchecked(sub.clone(), cat.clone(), objs.to_vec(), keep);
    (sub, incl)
}

/// A functor between finite categories, stored as explicit object and
/// morphism maps; preservation of the structure is checked exhaustively.
#[derive(Clone, Debug, PartialEq)]
pub struct Functor {
    pub dom: FinCat,
    pub cod: FinCat,
    obj_map: Vec<usize>,
    mor_map: Vec<usize>,
}

impl Functor {
    pub fn new(dom: FinCat, cod: FinCat, obj_map: Vec<usize>, mor_map: Vec<usize>) -> Result<Functor, CatError> {
        let f = Functor { dom, cod, obj_map, mor_map };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        dom: FinCat,
        cod: FinCat,
        obj_map: Vec<usize>,
        mor_map: Vec<usize>,
    ) -> Functor {
        let f = Functor { dom, cod, obj_map, mor_map };
        debug_assert!(f.dom.mors.len() > 200 || f.validate().is_ok(), "invalid internal functor");
        f
    }

    /// Build from id-level maps. Identities may be omitted from `mor_map`.
    pub fn from_maps(
        dom: &FinCat,
        cod: &FinCat,
        objs: &[(String, String)],
        mors: &[(String, String)],
    ) -> Result<Functor, CatError> {
        let mut obj_map = vec![usize::MAX; dom.object_count()];
        for (x, ux) in objs {
            let i = dom
                .object_index(&ObjId(x.clone()))
                .ok_or_else(|| CatError::NoSuchObject(x.clone()))?;
            let j = cod
                .object_index(&ObjId(ux.clone()))
                .ok_or_else(|| CatError::NoSuchObject(ux.clone()))?;
            obj_map[i] = j;
        }
        if let Some(i) = obj_map.iter().position(|&x| x == usize::MAX) {
            return Err(CatError::Mismatch(format!(
                "object `{}` has no image",
                dom.object_id(i)
            )));
        }
        let mut mor_map = vec![usize::MAX; dom.morphism_count()];
        for (f, uf) in mors {
            let i = dom
                .morphism_index(&MorId(f.clone()))
                .ok_or_else(|| CatError::NoSuchMorphism(f.clone()))?;
            let j = cod
                .morphism_index(&MorId(uf.clone()))
                .ok_or_else(|| CatError::NoSuchMorphism(uf.clone()))?;
            mor_map[i] = j;
        }
        for m in dom.morphisms() {
            if mor_map[m] == usize::MAX {
                if dom.is_identity(m) {
                    mor_map[m] = cod.identity_of(obj_map[dom.src(m)]);
                } else {
                    return Err(CatError::Mismatch(format!(
                        "morphism `{}` has no image",
                        dom.morphism_id(m)
                    )));
                }
            }
        }
        Functor::new(dom.clone(), cod.clone(), obj_map, mor_map)
    }

    pub fn validate(&self) -> Result<(), CatError> {
        if self.obj_map.len() != self.dom.object_count()
            || self.mor_map.len() != self.dom.morphism_count()
        {
            return Err(CatError::Mismatch("functor map sizes do not match".into()));
        }
        for m in self.dom.morphisms() {
            let im = self.mor_map[m];
            if self.cod.src(im) != self.obj_map[self.dom.src(m)]
                || self.cod.tgt(im) != self.obj_map[self.dom.tgt(m)]
            {
                return Err(CatError::Mismatch(format!(
                    "functor does not preserve endpoints of `{}`",
                    self.dom.morphism_id(m)
                )));
            }
        }
        for o in self.dom.objects() {
            if self.mor_map[self.dom.identity_of(o)] != self.cod.identity_of(self.obj_map[o]) {
                return Err(CatError::Mismatch(format!(
                    "functor does not preserve identity of `{}`",
                    self.dom.object_id(o)
                )));
            }
        }
        for g in self.dom.morphisms() {
            for f in self.dom.morphisms() {
                if let Some(h) = self.dom.compose(g, f) {
                    let lhs = self.cod.compose(self.mor_map[g], self.mor_map[f]);
                    if lhs != Some(self.mor_map[h]) {
                        return Err(CatError::Mismatch(format!(
                            "functor does not preserve {}∘{}",
                            self.dom.morphism_id(g),
                            self.dom.morphism_id(f)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn identity(cat: &FinCat) -> Functor {
        Functor::new_unchecked(
            cat.clone(),
            cat.clone(),
            cat.objects().collect(),
            cat.morphisms().collect(),
        )
    }

    /// The functor 𝟙 → cat picking one object.
    pub fn from_object(cat: &FinCat, obj: usize) -> Functor {
        let one = shapes::one();
        Functor::new_unchecked(one, cat.clone(), vec![obj], vec![cat.identity_of(obj)])
    }

    /// The unique functor cat → 𝟙.
    pub fn to_point(cat: &FinCat) -> Functor {
        let one = shapes::one();
        Functor::new_unchecked(
            cat.clone(),
            one,
            vec![0; cat.object_count()],
            vec![0; cat.morphism_count()],
        )
    }

    pub fn apply_obj(&self, o: usize) -> usize {
        self.obj_map[o]
    }

    pub fn apply_mor(&self, m: usize) -> usize {
        self.mor_map[m]
    }

    /// Composite `next ∘ self`.
    pub fn then(&self, next: &Functor) -> Result<Functor, CatError> {
        if self.cod != next.dom {
            return Err(CatError::Mismatch("functor composition mismatch".into()));
        }
        Ok(Functor::new_unchecked(
            self.dom.clone(),
            next.cod.clone(),
            self.obj_map.iter().map(|&o| next.obj_map[o]).collect(),
            self.mor_map.iter().map(|&m| next.mor_map[m]).collect(),
        ))
    }

    pub fn op(&self) -> Functor {
        Functor::new_unchecked(
            self.dom.op(),
            self.cod.op(),
            self.obj_map.clone(),
            self.mor_map.clone(),
        )
    }

    pub fn is_identity_functor(&self) -> bool {
        self.dom == self.cod
            && self.obj_map.iter().enumerate().all(|(i, &j)| i == j)
            && self.mor_map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Image objects, deduplicated.
    pub fn object_image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.obj_map.clone();
        im.sort_unstable();
        im.dedup();
        im
    }
}

/// A natural transformation between parallel functors, stored as one
/// component morphism per object of the domain shape.
#[derive(Clone, Debug, PartialEq)]
pub struct NatTrans {
    pub dom: Functor,
    pub cod: Functor,
    comps: Vec<usize>,
}

impl NatTrans {
    pub fn new(dom: Functor, cod: Functor, comps: Vec<usize>) -> Result<NatTrans, CatError> {
        let t = NatTrans { dom, cod, comps };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(dom: Functor, cod: Functor, comps: Vec<usize>) -> NatTrans {
        let t = NatTrans { dom, cod, comps };
        debug_assert!(t.dom.dom.mors.len() > 200 || t.validate().is_ok(), "invalid internal nat trans");
        t
    }

    pub fn validate(&self) -> Result<(), CatError> {
        if self.dom.dom != self.cod.dom || self.dom.cod != self.cod.cod {
            return Err(CatError::Mismatch("transformation between non-parallel functors".into()));
        }
        let target = &self.dom.cod;
        if self.comps.len() != self.dom.dom.object_count() {
            return Err(CatError::Mismatch("wrong number of components".into()));
        }
        for o in self.dom.dom.objects() {
            let c = self.comps[o];
            if target.src(c) != self.dom.apply_obj(o) || target.tgt(c) != self.cod.apply_obj(o) {
                return Err(CatError::Mismatch(format!(
                    "component at `{}` has wrong endpoints",
                    self.dom.dom.object_id(o)
                )));
            }
        }
        for m in self.dom.dom.morphisms() {
            let (x, y) = (self.dom.dom.src(m), self.dom.dom.tgt(m));
            let lhs = target.compose(self.comps[y], self.dom.apply_mor(m));
            let rhs = target.compose(self.cod.apply_mor(m), self.comps[x]);
            if lhs.is_none() || lhs != rhs {
                return Err(CatError::Mismatch(format!(
                    "naturality fails at `{}`",
                    self.dom.dom.morphism_id(m)
                )));
            }
        }
        Ok(())
    }

    pub fn identity(f: &Functor) -> NatTrans {
        let comps = f
            .dom
            .objects()
            .map(|o| f.cod.identity_of(f.apply_obj(o)))
            .collect();
        NatTrans::new_unchecked(f.clone(), f.clone(), comps)
    }

    pub fn component(&self, o: usize) -> usize {
        self.comps[o]
    }

    /// Vertical composite `other ∘ self` (self first).
    pub fn vcomp(&self, other: &NatTrans) -> Result<NatTrans, CatError> {
        if self.cod != other.dom {
            return Err(CatError::Mismatch("vertical composition mismatch".into()));
        }
        let target = &self.dom.cod;
        let comps = self
            .dom
            .dom
            .objects()
            .map(|o| target.compose(other.comps[o], self.comps[o]).expect("composable components"))
            .collect();
        Ok(NatTrans::new_unchecked(self.dom.clone(), other.cod.clone(), comps))
    }

    /// Precompose with a functor: the transformation α·F with components α_{F x}.
    pub fn whisker_pre(&self, f: &Functor) -> Result<NatTrans, CatError> {
        if f.cod != self.dom.dom {
            return Err(CatError::Mismatch("whisker_pre mismatch".into()));
        }
        let comps = f.dom.objects().map(|o| self.comps[f.apply_obj(o)]).collect();
        Ok(NatTrans::new_unchecked(f.then(&self.dom)?, f.then(&self.cod)?, comps))
    }

    /// Postcompose with a functor: the transformation H·α with components H(α_x).
    pub fn whisker_post(&self, h: &Functor) -> Result<NatTrans, CatError> {
        if self.dom.cod != h.dom {
            return Err(CatError::Mismatch("whisker_post mismatch".into()));
        }
        let comps = self
            .dom
            .dom
            .objects()
            .map(|o| h.apply_mor(self.comps[o]))
            .collect();
        Ok(NatTrans::new_unchecked(self.dom.then(h)?, self.cod.then(h)?, comps))
    }

    pub fn is_iso(&self) -> bool {
        let target = &self.dom.cod;
        self.comps.iter().all(|&c| target.is_iso(c))
    }
}

/// An adjunction `left ⊣ right` with `left: Y → X`, `right: X → Y`,
/// unit `Id_Y ⇒ right∘left` and counit `left∘right ⇒ Id_X`.
#[derive(Clone, Debug, PartialEq)]
pub struct Adjunction {
    pub left: Functor,
    pub right: Functor,
    pub unit: NatTrans,
    pub counit: NatTrans,
}

impl Adjunction {
    pub fn new(
        left: Functor,
        right: Functor,
        unit: NatTrans,
        counit: NatTrans,
    ) -> Result<Adjunction, CatError> {
        let adj = Adjunction { left, right, unit, counit };
        adj.validate_shape()?;
        Ok(adj)
    }

    pub fn validate_shape(&self) -> Result<(), CatError> {
        if self.left.dom != self.right.cod || self.left.cod != self.right.dom {
            return Err(CatError::Mismatch("adjunction functors are not opposed".into()));
        }
        self.unit.validate()?;
        self.counit.validate()?;
        let y = &self.left.dom;
        let x = &self.right.dom;
        if self.unit.dom != Functor::identity(y) || self.unit.cod != self.left.then(&self.right)? {
            return Err(CatError::Mismatch("unit has wrong boundary".into()));
        }
        if self.counit.dom != self.right.then(&self.left)? || self.counit.cod != Functor::identity(x)
        {
            return Err(CatError::Mismatch("counit has wrong boundary".into()));
        }
        Ok(())
    }

    /// Composite adjunction: given `self = L1 ⊣ R1` and `inner = L2 ⊣ R2`
    /// with L2: Z → Y, L1: Y → X, produce `L1∘L2 ⊣ R2∘R1`.
    pub fn compose(&self, inner: &Adjunction) -> Result<Adjunction, CatError> {
        let left = inner.left.then(&self.left)?;
        let right = self.right.then(&inner.right)?;
        // unit: Id_Z ⇒ R2 L2 ⇒ R2 R1 L1 L2
        let middle = self.unit.whisker_pre(&inner.left)?.whisker_post(&inner.right)?;
        let unit = inner.unit.vcomp(&middle)?;
        let unit = NatTrans::new_unchecked(
            Functor::identity(&inner.left.dom),
            left.then(&right)?,
            (0..unit.comps.len()).map(|o| unit.comps[o]).collect(),
        );
        // counit: L1 L2 R2 R1 ⇒ L1 R1 ⇒ Id_X
        let middle = inner.counit.whisker_pre(&self.right)?.whisker_post(&self.left)?;
        let counit = middle.vcomp(&self.counit)?;
        let counit = NatTrans::new_unchecked(
            right.then(&left)?,
            Functor::identity(&self.left.cod),
            (0..counit.comps.len()).map(|o| counit.comps[o]).collect(),
        );
        Adjunction::new(left, right, unit, counit)
    }
}

/// A square of functors with a transformation filling it:
///
/// ```text
///        p
///    D ----> A
///  q |   α   | u
///    v       v
///    B ----> C
///        v
/// ```
///
/// with `alpha : u∘p ⇒ v∘q`.
#[derive(Clone, Debug)]
pub struct CatSquare {
    pub p: Functor,
    pub q: Functor,
    pub u: Functor,
    pub v: Functor,
    pub alpha: NatTrans,
}

impl CatSquare {
    pub fn new(p: Functor, q: Functor, u: Functor, v: Functor, alpha: NatTrans) -> Result<CatSquare, CatError> {
        if p.dom != q.dom {
            return Err(CatError::Mismatch("square: p and q have different domains".into()));
        }
        if p.cod != u.dom || q.cod != v.dom || u.cod != v.cod {
            return Err(CatError::Mismatch("square: boundary functors do not compose".into()));
        }
        let up = p.then(&u)?;
        let vq = q.then(&v)?;
        if alpha.dom != up || alpha.cod != vq {
            return Err(CatError::Mismatch("square: alpha has wrong boundary".into()));
        }
        alpha.validate()?;
        Ok(CatSquare { p, q, u, v, alpha })
    }

    pub fn fiber_domain(&self) -> &FinCat {
        &self.p.dom
    }
}

// ---------------------------------------------------------------------------
// raw expansion and law checking
// ---------------------------------------------------------------------------

struct Expanded {
    name: String,
    objects: Vec<ObjId>,
    mors: Vec<Mor>,
    ident: Vec<usize>,
    /// declared entries, may conflict or be incomplete
    entries: Vec<((usize, usize), usize)>,
}

impl Expanded {
    fn into_cat(self) -> FinCat {
        let mut comp = HashMap::new();
        for ((g, f), h) in self.entries {
            comp.insert((g as u32, f as u32), h as u32);
        }
        FinCat::from_parts(self.name, self.objects, self.mors, self.ident, comp)
    }
}

fn expand_raw(raw: &RawCategory) -> Result<Expanded, StructuralError> {
    if !raw.covers.is_empty() && !raw.morphisms.is_empty() {
        return Err(StructuralError::MixedPosetAndMorphisms);
    }
    let mut objects: Vec<ObjId> = Vec::new();
    let mut obj_idx: HashMap<&str, usize> = HashMap::new();
    for o in &raw.objects {
        if obj_idx.insert(o, objects.len()).is_some() {
            return Err(StructuralError::DuplicateObject(o.clone()));
        }
        objects.push(ObjId(o.clone()));
    }

    let mut decl_morphisms: Vec<(String, String, String)> = raw.morphisms.clone();
    let mut decl_comps: Vec<(String, String, String)> = raw.compositions.clone();

    if !raw.covers.is_empty() {
        // Poset shorthand: reachability through covers gives x ≤ y morphisms.
        let n = objects.len();
        let mut le = vec![vec![false; n]; n];
        for (x, y) in &raw.covers {
            let i = *obj_idx
                .get(x.as_str())
                .ok_or_else(|| StructuralError::UnknownCoverObject(x.clone()))?;
            let j = *obj_idx
                .get(y.as_str())
                .ok_or_else(|| StructuralError::UnknownCoverObject(y.clone()))?;
            le[i][j] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        for (x, y) in &raw.covers {
            let i = obj_idx[x.as_str()];
            let j = obj_idx[y.as_str()];
            if i == j || le[j][i] {
                return Err(StructuralError::CoverCycle(x.clone(), y.clone()));
            }
        }
        let mor_name = |i: usize, j: usize| format!("{}<={}", objects[i], objects[j]);
        for i in 0..n {
            for j in 0..n {
                if le[i][j] {
                    decl_morphisms.push((mor_name(i, j), objects[i].0.clone(), objects[j].0.clone()));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !le[i][j] {
                    continue;
                }
                for k in 0..n {
                    if le[j][k] {
                        decl_comps.push((mor_name(j, k), mor_name(i, j), mor_name(i, k)));
                    }
                }
            }
        }
    }

    let mut mors: Vec<Mor> = Vec::new();
    let mut mor_idx: HashMap<String, usize> = HashMap::new();
    // identities first
    let mut ident = Vec::new();
    for (i, o) in objects.iter().enumerate() {
        let id = identity_id(&o.0);
        ident.push(mors.len());
        mor_idx.insert(id.clone(), mors.len());
        mors.push(Mor { id: MorId(id), src: i, tgt: i });
    }
    for (id, src, tgt) in &decl_morphisms {
        if id.starts_with("id:") {
            return Err(StructuralError::ReservedMorphismId(id.clone()));
        }
        let s = *obj_idx
            .get(src.as_str())
            .ok_or_else(|| StructuralError::UnknownObject { mor: id.clone(), obj: src.clone() })?;
        let t = *obj_idx
            .get(tgt.as_str())
            .ok_or_else(|| StructuralError::UnknownObject { mor: id.clone(), obj: tgt.clone() })?;
        if mor_idx.insert(id.clone(), mors.len()).is_some() {
            return Err(StructuralError::DuplicateMorphism(id.clone()));
        }
        mors.push(Mor { id: MorId(id.clone()), src: s, tgt: t });
    }

    let mut entries: Vec<((usize, usize), usize)> = Vec::new();
    // forced entries involving identities
    for (m, mor) in mors.iter().enumerate() {
        entries.push(((ident[mor.tgt], m), m));
        if ident[mor.src] != ident[mor.tgt] || m != ident[mor.src] {
            entries.push(((m, ident[mor.src]), m));
        }
    }
    for (g, f, h) in &decl_comps {
        let gi = *mor_idx
            .get(g.as_str())
            .ok_or_else(|| StructuralError::UnknownMorphism(g.clone()))?;
        let fi = *mor_idx
            .get(f.as_str())
            .ok_or_else(|| StructuralError::UnknownMorphism(f.clone()))?;
        let hi = *mor_idx
            .get(h.as_str())
            .ok_or_else(|| StructuralError::UnknownMorphism(h.clone()))?;
        entries.push(((gi, fi), hi));
    }

    Ok(Expanded { name: raw.name.clone(), objects, mors, ident, entries })
}

fn check_laws(exp: &Expanded) -> ValidationReport {
    let mut violations = Vec::new();
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for &((g, f), h) in &exp.entries {
        if exp.mors[f].tgt != exp.mors[g].src {
            violations.push(LawViolation::NonComposablePair {
                g: exp.mors[g].id.clone(),
                f: exp.mors[f].id.clone(),
            });
            continue;
        }
        if exp.mors[h].src != exp.mors[f].src || exp.mors[h].tgt != exp.mors[g].tgt {
            violations.push(LawViolation::CompositeTyping {
                g: exp.mors[g].id.clone(),
                f: exp.mors[f].id.clone(),
                composite: exp.mors[h].id.clone(),
            });
            continue;
        }
        if let Some(&prev) = table.get(&(g, f)) {
            if prev != h {
                violations.push(LawViolation::ConflictingComposite {
                    g: exp.mors[g].id.clone(),
                    f: exp.mors[f].id.clone(),
                    first: exp.mors[prev].id.clone(),
                    second: exp.mors[h].id.clone(),
                });
            }
        } else {
            table.insert((g, f), h);
        }
    }
    let nm = exp.mors.len();
    for g in 0..nm {
        for f in 0..nm {
            if exp.mors[f].tgt == exp.mors[g].src && !table.contains_key(&(g, f)) {
                violations.push(LawViolation::MissingComposite {
                    g: exp.mors[g].id.clone(),
                    f: exp.mors[f].id.clone(),
                });
            }
        }
    }
    for (f, mor) in exp.mors.iter().enumerate() {
        let lid = exp.ident[mor.tgt];
        let rid = exp.ident[mor.src];
        let left_ok = table.get(&(lid, f)).copied() == Some(f);
        let right_ok = table.get(&(f, rid)).copied() == Some(f);
        if !(left_ok && right_ok) {
            violations.push(LawViolation::IdentityLaw { mor: mor.id.clone() });
        }
    }
    for h in 0..nm {
        for g in 0..nm {
            if exp.mors[g].tgt != exp.mors[h].src {
                continue;
            }
            let hg = match table.get(&(h, g)) {
                Some(&x) => x,
                None => continue,
            };
            for f in 0..nm {
                if exp.mors[f].tgt != exp.mors[g].src {
                    continue;
                }
                let gf = match table.get(&(g, f)) {
                    Some(&x) => x,
                    None => continue,
                };
                if let (Some(&l), Some(&r)) = (table.get(&(hg, f)), table.get(&(h, gf))) {
                    if l != r {
                        violations.push(LawViolation::Associativity {
                            h: exp.mors[h].id.clone(),
                            g: exp.mors[g].id.clone(),
                            f: exp.mors[f].id.clone(),
                            left: exp.mors[l].id.clone(),
                            right: exp.mors[r].id.clone(),
                        });
                    }
                }
            }
        }
    }
    ValidationReport { violations }
}

/// Enumerate every functor dom → cod by backtracking over object and
/// morphism images. Intended for small shapes only.
pub fn all_functors(dom: &FinCat, cod: &FinCat) -> Vec<Functor> {
    let mut out = Vec::new();
    let nobj = dom.object_count();
    let mut obj_map = vec![0usize; nobj];
    fn assign_objects(
        i: usize,
        dom: &FinCat,
        cod: &FinCat,
        obj_map: &mut Vec<usize>,
        out: &mut Vec<Functor>,
    ) {
        if i == dom.object_count() {
            let mut mor_map = vec![usize::MAX; dom.morphism_count()];
            for o in dom.objects() {
                mor_map[dom.identity_of(o)] = cod.identity_of(obj_map[o]);
            }
            assign_morphisms(0, dom, cod, obj_map, &mut mor_map, out);
            return;
        }
        for t in 0..cod.object_count() {
            obj_map[i] = t;
            assign_objects(i + 1, dom, cod, obj_map, out);
        }
    }
    fn assign_morphisms(
        m: usize,
        dom: &FinCat,
        cod: &FinCat,
        obj_map: &[usize],
        mor_map: &mut Vec<usize>,
        out: &mut Vec<Functor>,
    ) {
        if m == dom.morphism_count() {
            let f = Functor {
                dom: dom.clone(),
                cod: cod.clone(),
                obj_map: obj_map.to_vec(),
                mor_map: mor_map.clone(),
            };
            if f.validate().is_ok() {
                out.push(f);
            }
            return;
        }
        if mor_map[m] != usize::MAX {
            assign_morphisms(m + 1, dom, cod, obj_map, mor_map, out);
            return;
        }
        let (s, t) = (obj_map[dom.src(m)], obj_map[dom.tgt(m)]);
        for cand in cod.hom(s, t) {
            mor_map[m] = cand;
            // partial consistency: composites with already-assigned maps
            let consistent = dom.morphisms().all(|g| {
                if mor_map[g] == usize::MAX {
                    return true;
                }
                for (a, b) in [(m, g), (g, m)] {
                    if let Some(h) = dom.compose(a, b) {
                        if mor_map[h] != usize::MAX {
                            if cod.compose(mor_map[a], mor_map[b]) != Some(mor_map[h]) {
                                return false;
                            }
                        }
                    }
                }
                true
            });
            if consistent {
                assign_morphisms(m + 1, dom, cod, obj_map, mor_map, out);
            }
        }
        mor_map[m] = usize::MAX;
    }
    assign_objects(0, dom, cod, &mut obj_map, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_category_is_valid() {
        let raw = RawCategory {
            name: "one".into(),
            objects: vec!["*".into()],
            ..Default::default()
        };
        let report = FinCat::validate_raw(&raw).unwrap();
        assert!(report.is_valid());
        let cat = FinCat::from_raw(&raw).unwrap();
        assert_eq!(cat.object_count(), 1);
        assert_eq!(cat.morphism_count(), 1);
    }

    #[test]
    fn broken_associativity_names_the_triple() {
        // Three composable arrows with one associativity entry redirected.
        let raw = RawCategory {
            name: "bad".into(),
            objects: vec!["a".into(), "b".into(), "c".into(), "d".into()],
            morphisms: vec![
                ("f".into(), "a".into(), "b".into()),
                ("g".into(), "b".into(), "c".into()),
                ("h".into(), "c".into(), "d".into()),
                ("gf".into(), "a".into(), "c".into()),
                ("hg".into(), "b".into(), "d".into()),
                ("hgf".into(), "a".into(), "d".into()),
                ("bad".into(), "a".into(), "d".into()),
            ],
            compositions: vec![
                ("g".into(), "f".into(), "gf".into()),
                ("h".into(), "g".into(), "hg".into()),
                ("h".into(), "gf".into(), "hgf".into()),
                ("hg".into(), "f".into(), "bad".into()),
                ("hgf".into(), "id:a".into(), "hgf".into()),
            ],
            covers: vec![],
        };
        let report = FinCat::validate_raw(&raw).unwrap();
        assert!(!report.is_valid());
        let found = report.violations.iter().any(|v| {
            matches!(v, LawViolation::Associativity { h, g, f, .. }
                if h.0 == "h" && g.0 == "g" && f.0 == "f")
        });
        assert!(found, "report should name the broken triple: {report}");
    }

    #[test]
    fn hasse_chain_expands_with_transitive_closure() {
        let raw = RawCategory {
            name: "chain".into(),
            objects: vec!["a".into(), "b".into(), "c".into()],
            covers: vec![("a".into(), "b".into()), ("b".into(), "c".into())],
            ..Default::default()
        };
        let cat = FinCat::from_raw(&raw).unwrap();
        // oracle: morphisms of a poset category = pairs in the reflexive
        // transitive closure; for the chain a<b<c there are 3 + 3 = 6
        assert_eq!(cat.morphism_count(), 6);
        assert!(cat.check_table().is_valid());
    }

    #[test]
    fn dangling_source_is_structural() {
        let raw = RawCategory {
            name: "bad".into(),
            objects: vec!["a".into()],
            morphisms: vec![("f".into(), "a".into(), "zzz".into())],
            ..Default::default()
        };
        match FinCat::validate_raw(&raw) {
            Err(StructuralError::UnknownObject { obj, .. }) => assert_eq!(obj, "zzz"),
            other => panic!("expected structural error, got {other:?}"),
        }
    }

    #[test]
    fn product_and_projections() {
        let two = shapes::two();
        let sq = product(&two, &two);
        assert_eq!(sq.object_count(), 4);
        assert_eq!(sq.morphism_count(), 9);
        assert!(sq.check_table().is_valid());
        for which in [0, 1] {
            let pr = projection(&two, &two, which);
            pr.validate().unwrap();
        }
        let d = diagonal(&two);
        d.validate().unwrap();
    }

    #[test]
    fn opposite_swaps_initial_terminal() {
        let two = shapes::two();
        assert_eq!(two.initial_objects(), vec![0]);
        assert_eq!(two.terminal_objects(), vec![1]);
        let op = two.op();
        assert!(op.check_table().is_valid());
        assert_eq!(op.initial_objects(), vec![1]);
        assert_eq!(op.terminal_objects(), vec![0]);
    }

    #[test]
    fn loop_free_detection() {
        assert!(shapes::two().is_loop_free());
        assert!(shapes::parallel_pair().is_loop_free());
        assert!(!shapes::idempotent_monoid().is_loop_free());
        assert!(!shapes::walking_iso().is_loop_free());
    }

    #[test]
    fn all_functors_between_small_shapes() {
        let one = shapes::one();
        let two = shapes::two();
        assert_eq!(all_functors(&one, &two).len(), 2);
        // functors 2 → 2 = monotone maps on {0,1}: 00, 01, 11
        assert_eq!(all_functors(&two, &two).len(), 3);
        // parallel pair → 2: obj maps with x≤y; arrows map to the unique hom
        let pp = shapes::parallel_pair();
        assert_eq!(all_functors(&pp, &two).len(), 3);
    }

    #[test]
    fn coproduct_injections_are_functors() {
        let (cat, inl, inr) = coproduct(&shapes::two(), &shapes::parallel_pair());
        assert!(cat.check_table().is_valid());
        inl.validate().unwrap();
        inr.validate().unwrap();
        assert_eq!(cat.components().len(), 2);
    }
}
