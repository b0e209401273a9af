//! Exhaustive classification of functor properties.

use super::Functor;

/// Properties of a functor, each decided by checking its definition on
/// every relevant tuple of objects and morphisms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FunctorFlags {
    pub fully_faithful: bool,
    pub sieve: bool,
    pub cosieve: bool,
    pub opfibration: bool,
    pub fibration: bool,
}

pub fn classify(f: &Functor) -> FunctorFlags {
    let fully_faithful = is_fully_faithful(f);
    FunctorFlags {
        fully_faithful,
        sieve: fully_faithful && is_sieve_closure(f, true),
        cosieve: fully_faithful && is_sieve_closure(f, false),
        opfibration: is_opfibration(f),
        fibration: is_fibration(f),
    }
}

fn is_fully_faithful(f: &Functor) -> bool {
    let (dom, cod) = (&f.dom, &f.cod);
    for a in dom.objects() {
        for a2 in dom.objects() {
            let hom = dom.hom(a, a2);
            let images: Vec<usize> = hom.iter().map(|&m| f.apply_mor(m)).collect();
            // injective
            for i in 0..images.len() {
                for j in (i + 1)..images.len() {
                    if images[i] == images[j] {
                        return false;
                    }
                }
            }
            // surjective onto Hom(fa, fa2)
            let target = cod.hom(f.apply_obj(a), f.apply_obj(a2));
            if target.iter().any(|m| !images.contains(m)) {
                return false;
            }
        }
    }
    true
}

/// `down = true`: every morphism into the image has its source in the image
/// (sieve); `down = false`: dual (cosieve).
fn is_sieve_closure(f: &Functor, down: bool) -> bool {
    let cod = &f.cod;
    let image = f.object_image();
    cod.morphisms().all(|m| {
        let (inside, other) = if down {
            (cod.tgt(m), cod.src(m))
        } else {
            (cod.src(m), cod.tgt(m))
        };
        !image.contains(&inside) || image.contains(&other)
    })
}

fn is_opfibration(f: &Functor) -> bool {
    let (dom, cod) = (&f.dom, &f.cod);
    for a in dom.objects() {
        for b in cod.objects() {
            for g in cod.hom(f.apply_obj(a), b) {
                let has_cocartesian_lift = dom.objects().any(|a1| {
                    dom.hom(a, a1)
                        .into_iter()
                        .filter(|&lift| f.apply_mor(lift) == g)
                        .any(|lift| is_cocartesian_lift(f, lift))
                });
                if !has_cocartesian_lift {
                    return false;
                }
            }
        }
    }
    true
}

fn is_cocartesian_lift(f: &Functor, lift: usize) -> bool {
    let (dom, cod) = (&f.dom, &f.cod);
    let a = dom.src(lift);
    let a1 = dom.tgt(lift);
    let g = f.apply_mor(lift);
    // for every h: a → a2 and g2 with f(h) = g2 ∘ g there must be a unique
    // k: a1 → a2 over g2 with k ∘ lift = h
    for a2 in dom.objects() {
        for h in dom.hom(a, a2) {
            for g2 in cod.hom(cod.tgt(g), f.apply_obj(a2)) {
                if cod.compose(g2, g) != Some(f.apply_mor(h)) {
                    continue;
                }
                let solutions = dom
                    .hom(a1, a2)
                    .into_iter()
                    .filter(|&k| f.apply_mor(k) == g2 && dom.compose(k, lift) == Some(h))
                    .count();
                if solutions != 1 {
                    return false;
                }
            }
        }
    }
    true
}

fn is_fibration(f: &Functor) -> bool {
    let (dom, cod) = (&f.dom, &f.cod);
    for a in dom.objects() {
        for b in cod.objects() {
            for g in cod.hom(b, f.apply_obj(a)) {
                let has_cartesian_lift = dom.objects().any(|a1| {
                    dom.hom(a1, a)
                        .into_iter()
                        .filter(|&lift| f.apply_mor(lift) == g)
                        .any(|lift| is_cartesian_lift(f, lift))
                });
                if !has_cartesian_lift {
                    return false;
                }
            }
        }
    }
    true
}

fn is_cartesian_lift(f: &Functor, lift: usize) -> bool {
    let (dom, cod) = (&f.dom, &f.cod);
    let a1 = dom.src(lift);
    let a = dom.tgt(lift);
    let g = f.apply_mor(lift);
    for a2 in dom.objects() {
        for h in dom.hom(a2, a) {
            for g2 in cod.hom(f.apply_obj(a2), cod.src(g)) {
                if cod.compose(g, g2) != Some(f.apply_mor(h)) {
                    continue;
                }
                let solutions = dom
                    .hom(a2, a1)
                    .into_iter()
                    .filter(|&k| f.apply_mor(k) == g2 && dom.compose(lift, k) == Some(h))
                    .count();
                if solutions != 1 {
                    return false;
                }
            }
        }
    }
    true
}
