//! Adjoint search through universal arrows.
//!
//! A left adjoint of f exists exactly when every comma category (b/f) has an
//! initial object; its value at b is that object, and the unit, counit and
//! action on morphisms are all forced. Dually for right adjoints through
//! terminal objects of (f/b).

use super::{comma, Adjunction, Functor, NatTrans, DEFAULT_SIZE_GUARD};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjointSide {
    Left,
    Right,
}

/// Search for an adjoint of `f` on the requested side. Returns the full
/// adjunction (with unit and counit) or `None` when some universal arrow
/// does not exist. The result always satisfies the triangle identities.
pub fn find_adjoint(f: &Functor, side: AdjointSide) -> Option<Adjunction> {
    match side {
        AdjointSide::Left => find_left(f),
        AdjointSide::Right => find_right(f),
    }
}

fn find_left(f: &Functor) -> Option<Adjunction> {
    let (a_cat, b_cat) = (&f.dom, &f.cod);
    // value and unit component at every b
    let mut value = Vec::with_capacity(b_cat.object_count());
    let mut eta = Vec::with_capacity(b_cat.object_count());
    for b in b_cat.objects() {
        let slice = comma(&Functor::from_object(b_cat, b), f, DEFAULT_SIZE_GUARD).ok()?;
        let init = *slice.cat.initial_objects().first()?;
        value.push(slice.q.apply_obj(init));
        eta.push(slice.alpha.component(init));
    }
    // action on morphisms: F g is the unique t with f(t)∘η_b = η_b' ∘ g
    let mut mor_map = Vec::with_capacity(b_cat.morphism_count());
    for g in b_cat.morphisms() {
        let (b, b1) = (b_cat.src(g), b_cat.tgt(g));
        let rhs = b_cat.compose(eta[b1], g)?;
        let mut candidates = a_cat
            .hom(value[b], value[b1])
            .into_iter()
            .filter(|&t| b_cat.compose(f.apply_mor(t), eta[b]) == Some(rhs));
        let t = candidates.next()?;
        debug_assert!(candidates.next().is_none(), "universal arrow not unique");
        mor_map.push(t);
    }
    let left = Functor::new(b_cat.clone(), a_cat.clone(), value.clone(), mor_map).ok()?;
    // counit at a: the unique t: F(f a) → a with f(t)∘η_{f a} = id
    let mut eps = Vec::with_capacity(a_cat.object_count());
    for a in a_cat.objects() {
        let fa = f.apply_obj(a);
        let want = b_cat.identity_of(fa);
        let mut candidates = a_cat
            .hom(left.apply_obj(fa), a)
            .into_iter()
            .filter(|&t| b_cat.compose(f.apply_mor(t), eta[fa]) == Some(want));
        let t = candidates.next()?;
        debug_assert!(candidates.next().is_none(), "counit not unique");
        eps.push(t);
    }
    let unit = NatTrans::new(Functor::identity(b_cat), left.then(f).ok()?, eta).ok()?;
    let counit = NatTrans::new(f.then(&left).ok()?, Functor::identity(a_cat), eps).ok()?;
    let adj = Adjunction::new(left, f.clone(), unit, counit).ok()?;
    debug_assert!(triangle_identities_hold(&adj));
    Some(adj)
}

fn find_right(f: &Functor) -> Option<Adjunction> {
    let (a_cat, b_cat) = (&f.dom, &f.cod);
    let mut value = Vec::with_capacity(b_cat.object_count());
    let mut eps = Vec::with_capacity(b_cat.object_count());
    for b in b_cat.objects() {
        let slice = comma(f, &Functor::from_object(b_cat, b), DEFAULT_SIZE_GUARD).ok()?;
        let term = *slice.cat.terminal_objects().first()?;
        value.push(slice.p.apply_obj(term));
        eps.push(slice.alpha.component(term));
    }
    // G g: the unique t with ε_{b'} ∘ f(t) = g ∘ ε_b
    let mut mor_map = Vec::with_capacity(b_cat.morphism_count());
    for g in b_cat.morphisms() {
        let (b, b1) = (b_cat.src(g), b_cat.tgt(g));
        let rhs = b_cat.compose(g, eps[b])?;
        let mut candidates = a_cat
            .hom(value[b], value[b1])
            .into_iter()
            .filter(|&t| b_cat.compose(eps[b1], f.apply_mor(t)) == Some(rhs));
        let t = candidates.next()?;
        debug_assert!(candidates.next().is_none(), "universal arrow not unique");
        mor_map.push(t);
    }
    let right = Functor::new(b_cat.clone(), a_cat.clone(), value.clone(), mor_map).ok()?;
    // unit at a: the unique t: a → G(f a) with ε_{f a} ∘ f(t) = id
    let mut eta = Vec::with_capacity(a_cat.object_count());
    for a in a_cat.objects() {
        let fa = f.apply_obj(a);
        let want = b_cat.identity_of(fa);
        let mut candidates = a_cat
            .hom(a, right.apply_obj(fa))
            .into_iter()
            .filter(|&t| b_cat.compose(eps[fa], f.apply_mor(t)) == Some(want));
        let t = candidates.next()?;
        debug_assert!(candidates.next().is_none(), "unit not unique");
        eta.push(t);
    }
    let unit = NatTrans::new(Functor::identity(a_cat), f.then(&right).ok()?, eta).ok()?;
    let counit = NatTrans::new(right.then(f).ok()?, Functor::identity(b_cat), eps).ok()?;
    let adj = Adjunction::new(f.clone(), right, unit, counit).ok()?;
    debug_assert!(triangle_identities_hold(&adj));
    Some(adj)
}

/// Both triangle identities, componentwise.
pub fn triangle_identities_hold(adj: &Adjunction) -> bool {
    let y_cat = &adj.left.dom;
    let x_cat = &adj.right.dom;
    let first = y_cat.objects().all(|y| {
        let ly = adj.left.apply_obj(y);
        x_cat.compose(adj.counit.component(ly), adj.left.apply_mor(adj.unit.component(y)))
            == Some(x_cat.identity_of(ly))
    });
    let second = x_cat.objects().all(|x| {
        let rx = adj.right.apply_obj(x);
        y_cat.compose(adj.right.apply_mor(adj.counit.component(x)), adj.unit.component(rx))
            == Some(y_cat.identity_of(rx))
    });
    first && second
}

#[cfg(test)]
mod tests {
    use super::super::{diagonal, shapes, Functor};
    use super::*;

    #[test]
    fn projection_to_point_has_right_adjoint_picking_terminal() {
        let two = shapes::two();
        let pi = Functor::to_point(&two);
        let adj = find_adjoint(&pi, AdjointSide::Right).expect("terminal object exists");
        assert_eq!(adj.right.apply_obj(0), 1);
        assert!(triangle_identities_hold(&adj));
        // and a left adjoint picking the initial object
        let adj = find_adjoint(&pi, AdjointSide::Left).expect("initial object exists");
        assert_eq!(adj.left.apply_obj(0), 0);
    }

    #[test]
    fn diagonal_on_boolean_lattice_has_join_as_left_adjoint() {
        // 4-element boolean lattice as a poset category
        let names: Vec<String> = ["bot", "a", "b", "top"].iter().map(|s| s.to_string()).collect();
        let le = |i: usize, j: usize| i == j || i == 0 || j == 3;
        let cat = shapes::poset(&names, le);
        let d = diagonal(&cat);
        let adj = find_adjoint(&d, AdjointSide::Left).expect("joins exist");
        // exhaustive-search oracle: F(x,y) must be the least upper bound
        let lub = |i: usize, j: usize| {
            (0..4)
                .filter(|&k| (le(i, k) || i == k) && (le(j, k) || j == k))
                .find(|&k| {
                    (0..4)
                        .filter(|&m| (le(i, m) || i == m) && (le(j, m) || j == m))
                        .all(|m| le(k, m) || k == m)
                })
                .unwrap()
        };
        let prod = &d.cod;
        for i in 0..4 {
            for j in 0..4 {
                let pair = prod
                    .object_index(&super::super::ObjId(format!(
                        "({},{})",
                        names[i], names[j]
                    )))
                    .unwrap();
                assert_eq!(adj.left.apply_obj(pair), lub(i, j), "join of ({i},{j})");
            }
        }
    }

    #[test]
    fn parallel_pair_endpoint_has_no_adjoint() {
        // the inclusion of the source object of the free parallel pair:
        // (y/f) has two incomparable objects, so no universal arrow
        let pp = shapes::parallel_pair();
        let incl = Functor::from_object(&pp, 0);
        assert!(find_adjoint(&incl, AdjointSide::Left).is_none());
        // right adjoint also fails: (f/y) has two objects, no terminal
        let incl_y = Functor::from_object(&pp, 1);
        assert!(find_adjoint(&incl_y, AdjointSide::Right).is_none());
    }
}
