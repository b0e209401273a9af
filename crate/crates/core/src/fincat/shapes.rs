//! Standard small categories used as diagram shapes.

use super::{FinCat, Functor, RawCategory};

/// The empty category.
pub fn empty() -> FinCat {
    FinCat::from_raw(&RawCategory { name: "0".into(), ..Default::default() }).unwrap()
}

/// The terminal category: one object `*`, one identity.
pub fn one() -> FinCat {
    FinCat::from_raw(&RawCategory {
        name: "1".into(),
        objects: vec!["*".into()],
        ..Default::default()
    })
    .unwrap()
}

/// The arrow category 0 → 1.
pub fn two() -> FinCat {
    chain(2)
}

/// The chain 0 → 1 → … → n−1 as a poset category.
pub fn chain(n: usize) -> FinCat {
    let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let covers = (1..n).map(|i| ((i - 1).to_string(), i.to_string())).collect();
    FinCat::from_raw(&RawCategory {
        name: format!("chain{n}"),
        objects,
        covers,
        ..Default::default()
    })
    .unwrap()
}

/// Discrete category on n objects `0 … n-1`.
pub fn discrete(n: usize) -> FinCat {
    FinCat::from_raw(&RawCategory {
        name: format!("disc{n}"),
        objects: (0..n).map(|i| i.to_string()).collect(),
        ..Default::default()
    })
    .unwrap()
}

/// Two parallel arrows `f, g : x ⇉ y` with no relations.
pub fn parallel_pair() -> FinCat {
    FinCat::from_raw(&RawCategory {
        name: "pp".into(),
        objects: vec!["x".into(), "y".into()],
        morphisms: vec![
            ("f".into(), "x".into(), "y".into()),
            ("g".into(), "x".into(), "y".into()),
        ],
        ..Default::default()
    })
    .unwrap()
}

/// One object with an idempotent endomorphism e, e∘e = e.
pub fn idempotent_monoid() -> FinCat {
    FinCat::from_raw(&RawCategory {
        name: "idem".into(),
        objects: vec!["*".into()],
        morphisms: vec![("e".into(), "*".into(), "*".into())],
        compositions: vec![("e".into(), "e".into(), "e".into())],
        ..Default::default()
    })
    .unwrap()
}

/// Two objects with mutually inverse arrows.
pub fn walking_iso() -> FinCat {
    FinCat::from_raw(&RawCategory {
        name: "iso".into(),
        objects: vec!["a".into(), "b".into()],
        morphisms: vec![
            ("f".into(), "a".into(), "b".into()),
            ("g".into(), "b".into(), "a".into()),
        ],
        compositions: vec![
            ("g".into(), "f".into(), "id:a".into()),
            ("f".into(), "g".into(), "id:b".into()),
        ],
        ..Default::default()
    })
    .unwrap()
}

fn grid_raw(rows: usize, cols: usize, name: &str) -> RawCategory {
    let obj = |i: usize, j: usize| format!("{i}{j}");
    let mut objects = Vec::new();
    let mut covers = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            objects.push(obj(i, j));
            if i + 1 < rows {
                covers.push((obj(i, j), obj(i + 1, j)));
            }
            if j + 1 < cols {
                covers.push((obj(i, j), obj(i, j + 1)));
            }
        }
    }
    RawCategory { name: name.into(), objects, covers, ..Default::default() }
}

/// The commuting square 2×2 with objects `00, 01, 10, 11`.
pub fn square() -> FinCat {
    FinCat::from_raw(&grid_raw(2, 2, "square")).unwrap()
}

/// The pushout corner: the square minus its terminal object `11`.
pub fn upper_corner() -> FinCat {
    FinCat::from_raw(&RawCategory {
        name: "corner_po".into(),
        objects: vec!["00".into(), "01".into(), "10".into()],
        covers: vec![("00".into(), "01".into()), ("00".into(), "10".into())],
        ..Default::default()
    })
    .unwrap()
}

/// The pullback corner: the square minus its initial object `00`.
pub fn lower_corner() -> FinCat {
    FinCat::from_raw(&RawCategory {
        name: "corner_pb".into(),
        objects: vec!["01".into(), "10".into(), "11".into()],
        covers: vec![("01".into(), "11".into()), ("10".into(), "11".into())],
        ..Default::default()
    })
    .unwrap()
}

/// The 2×3 grid with objects `00 … 12`, two squares side by side.
pub fn grid2x3() -> FinCat {
    FinCat::from_raw(&grid_raw(2, 3, "grid2x3")).unwrap()
}

/// The functor square → grid2x3 hitting columns j and k (j < k).
pub fn column_pair(j: usize, k: usize) -> Functor {
    let sq = square();
    let grid = grid2x3();
    let map = |i: usize, col: usize| {
        grid.object_index(&super::ObjId(format!("{i}{col}"))).unwrap()
    };
    let obj_map = vec![map(0, j), map(0, k), map(1, j), map(1, k)];
    between_thin(&sq, &grid, obj_map)
}

/// A poset category from an explicit reachability predicate.
pub fn poset(names: &[String], le: impl Fn(usize, usize) -> bool) -> FinCat {
    let mut covers = Vec::new();
    let n = names.len();
    for i in 0..n {
        for j in 0..n {
            if i != j && le(i, j) {
                // emit all relations; transitive closure is idempotent
                covers.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    FinCat::from_raw(&RawCategory {
        name: "poset".into(),
        objects: names.to_vec(),
        covers,
        ..Default::default()
    })
    .unwrap()
}

/// Functor into a thin category (every hom-set has at most one element),
/// determined by its object map.
pub fn between_thin(dom: &FinCat, cod: &FinCat, obj_map: Vec<usize>) -> Functor {
    let mor_map = dom
        .morphisms()
        .map(|m| {
            let h = cod.hom(obj_map[dom.src(m)], obj_map[dom.tgt(m)]);
            assert!(h.len() == 1, "object map is not monotone or codomain not thin");
            h[0]
        })
        .collect();
    Functor::new(dom.clone(), cod.clone(), obj_map, mor_map).expect("thin functor")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_inventories() {
        assert_eq!(empty().object_count(), 0);
        assert_eq!(one().morphism_count(), 1);
        assert_eq!(two().morphism_count(), 3);
        assert_eq!(chain(3).morphism_count(), 6);
        assert_eq!(square().object_count(), 4);
        // square: 4 identities + 4 edges + 1 diagonal
        assert_eq!(square().morphism_count(), 9);
        assert_eq!(upper_corner().morphism_count(), 5);
        assert_eq!(lower_corner().morphism_count(), 5);
        // 2x3 grid: 6 identities + edges 7 + compuond paths: hom counts
        let g = grid2x3();
        assert!(g.check_table().is_valid());
        assert_eq!(g.object_count(), 6);
    }

    #[test]
    fn column_pair_functors() {
        for (j, k) in [(0, 1), (1, 2), (0, 2)] {
            let f = column_pair(j, k);
            f.validate().unwrap();
        }
    }

    #[test]
    fn walking_iso_has_isos() {
        let c = walking_iso();
        let f = c.morphism_index(&super::super::MorId("f".into())).unwrap();
        assert!(c.is_iso(f));
        assert!(!c.is_loop_free());
    }
}
