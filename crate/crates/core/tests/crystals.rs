use proptest::prelude::*;
use setdec::sqrt::{sqrt_string_lengths, SqrtCrystal};
use setdec::sv::{sv_op, sv_op_traced, sv_queer_op, sv_queer_star_op, SvCrystal, SvStep};
use setdec::tableau::{enumerate_family, is_member, Entry, FamilyId, SetTableau, Square};
use setdec::word::{
    dectab_op, revrow, word_op, word_queer_op, Crystal, Direction, Label, Mode, Standard, Tensor, Word,
};
use setdec::StrictPartition;

use Direction::*;

fn shape(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

fn word_of(t: &SetTableau, n: usize) -> Word {
    Word::new(revrow(t).unwrap().into_iter().map(|l| l.value).collect(), n).unwrap()
}

/// Cells strictly between `a` and `b` in reverse reading order.
fn between(t: &SetTableau, a: Square, b: Square) -> Vec<usize> {
    let order = t.reverse_reading_order();
    let pa = order.iter().position(|&c| t.square_of(c) == a).unwrap();
    let pb = order.iter().position(|&c| t.square_of(c) == b).unwrap();
    let (lo, hi) = (pa.min(pb), pa.max(pb));
    order[lo + 1..hi].to_vec()
}

/// The box-position claims for the moving case of `e_i` and `f_i`.
fn check_step(t: &SetTableau, i: usize, dir: Direction) {
    let Some((u, step)) = sv_op_traced(t, i, dir) else { return };
    assert!(is_member(&u, FamilyId::SetDecTab), "{t} -> {u}");
    assert_eq!(u.degree(), t.degree());
    let back = sv_op(&u, i, if dir == Raise { Lower } else { Raise }).unwrap();
    assert_eq!(back.as_ref(), Some(t), "{t} {i} {dir:?}");
    if let SvStep::Move { from, to } = step {
        let rows = match dir {
            Raise => [to.row.wrapping_sub(1), to.row],
            Lower => [to.row, to.row + 1],
        };
        assert!(rows.contains(&from.row), "{t} {i} {dir:?}: donor {from} target {to}");
        let (lo, hi) = (Entry::unprimed(i as u32), Entry::unprimed(i as u32 + 1));
        for c in between(t, from, to) {
            assert!(!t.contains(c, lo) && !t.contains(c, hi), "{t}: box {} between", t.square_of(c));
        }
    }
}

#[test]
fn moving_case_box_positions() {
    for (s, n, extra) in [("2", 4, 3), ("2,1", 4, 3), ("3,1", 4, 2), ("3,2", 4, 2), ("4,2,1", 3, 2)] {
        let lambda = shape(s);
        for t in enumerate_family(FamilyId::SetDecTab, &lambda, n, lambda.size() + extra) {
            for i in 1..n as usize {
                check_step(&t, i, Raise);
                check_step(&t, i, Lower);
            }
        }
    }
}

#[test]
fn single_valued_operators_agree_with_words() {
    for size in 1..=5 {
        for lambda in StrictPartition::all_of_size(size) {
            for n in 2..=4usize {
                for t in enumerate_family(FamilyId::DecTab, &lambda, n as u32, 0) {
                    let w = word_of(&t, n);
                    for dir in [Raise, Lower] {
                        let q = dectab_op(&t, Label::Bar, dir).unwrap();
                        assert_eq!(q.as_ref().map(|u| word_of(u, n)), word_queer_op(&w, dir).unwrap());
                        // the set-valued operators restrict to the classical ones
                        assert_eq!(sv_queer_op(&t, dir).unwrap(), q);
                        for i in 1..n {
                            let u = dectab_op(&t, Label::Index(i), dir).unwrap();
                            assert_eq!(u.as_ref().map(|u| word_of(u, n)), word_op(&w, i, dir).unwrap());
                            assert_eq!(sv_op(&t, i, dir).unwrap(), u, "{t} {i} {dir:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn restricted_queer_operators_agree_with_starred() {
    for (s, n, d) in [("2", 3, 5), ("2,1", 3, 5), ("3,1", 3, 6)] {
        for t in enumerate_family(FamilyId::SetDecTab, &shape(s), n, d) {
            for dir in [Raise, Lower] {
                let star = sv_queer_star_op(&t, dir).unwrap();
                let plain = sv_queer_op(&t, dir).unwrap();
                let expected = star.filter(|u| !u.has_repeats()).map(|u| u.with_multiset(false));
                assert_eq!(plain, expected, "{t} {dir:?}");
            }
        }
    }
}

#[test]
fn starred_operators_are_partial_inverses() {
    for t in enumerate_family(FamilyId::SetDecTabStar, &shape("2,1"), 3, 5) {
        if let Some(u) = sv_queer_star_op(&t, Raise).unwrap() {
            assert_eq!(sv_queer_star_op(&u, Lower).unwrap().map(|x| x.with_multiset(t.is_multiset())), Some(t.clone()));
        }
    }
}

#[test]
fn form_counts_give_string_lengths() {
    for s in ["1", "2", "2,1", "3,1"] {
        let c = SqrtCrystal::new(shape(s), 3);
        for t in c.elements() {
            for i in 1..3 {
                let label = Label::Index(i);
                assert_eq!(sqrt_string_lengths(&t, i as u32), (c.epsilon(&t, label), c.phi(&t, label)), "{t} {i}");
            }
        }
    }
}

fn assoc_check<C: Crystal>(c: &C, elems: &[C::Elem]) {
    let left = Tensor::new(Tensor::new(c, c).unwrap(), c).unwrap();
    let right = Tensor::new(c, Tensor::new(c, c).unwrap()).unwrap();
    for a in elems {
        for b in elems {
            for d in elems {
                let l = ((a.clone(), b.clone()), d.clone());
                let r = (a.clone(), (b.clone(), d.clone()));
                assert_eq!(left.weight(&l), right.weight(&r));
                for label in left.labels() {
                    for dir in [Raise, Lower] {
                        let x = left.apply(&l, label, dir).map(|((p, q), s)| (p, (q, s)));
                        assert_eq!(x, right.apply(&r, label, dir), "{label} {dir:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn tensor_products_are_associative() {
    for mode in [Mode::Gl, Mode::Queer] {
        let b = Standard::new(3, mode);
        assoc_check(&b, &b.elements());
    }
    let sv = SvCrystal::new(shape("1"), 3);
    assoc_check(&sv, &sv.elements(3));
    let sq = SqrtCrystal::new(shape("1"), 3);
    assoc_check(&sq, &sq.elements());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_and_letter_tensors_agree(letters in proptest::collection::vec(1u32..=3, 4), i in 1usize..3) {
        let b = Standard::new(3, Mode::Queer);
        let t4 = Tensor::new(b, Tensor::new(b, Tensor::new(b, b).unwrap()).unwrap()).unwrap();
        let w = Word::new(letters.clone(), 3).unwrap();
        let e = (letters[0], (letters[1], (letters[2], letters[3])));
        let flat = |x: Option<(u32, (u32, (u32, u32)))>| x.map(|(a, (b, (c, d)))| vec![a, b, c, d]);
        for dir in [Raise, Lower] {
            prop_assert_eq!(flat(t4.apply(&e, Label::Index(i), dir)), word_op(&w, i, dir).unwrap().map(|x| x.letters().to_vec()));
            prop_assert_eq!(flat(t4.apply(&e, Label::Bar, dir)), word_queer_op(&w, dir).unwrap().map(|x| x.letters().to_vec()));
        }
    }

    #[test]
    fn operators_are_partial_inverses(k in any::<prop::sample::Index>(), i in 1usize..4) {
        let c = SvCrystal::new(shape("3,1"), 4);
        let elems = c.elements(6);
        let t = &elems[k.index(elems.len())];
        for label in [Label::Bar, Label::Index(i)] {
            if let Some(u) = c.lower(t, label) {
                prop_assert_eq!(c.raise(&u, label), Some(t.clone()));
            }
            if let Some(u) = c.raise(t, label) {
                prop_assert_eq!(c.lower(&u, label), Some(t.clone()));
            }
        }
    }
}
