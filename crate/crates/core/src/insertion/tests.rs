use super::*;
use crate::tableau::SetValuedTableau;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn sh(rows: &[&[u32]]) -> Tableau {
    Tableau::shifted(rows)
}

fn sv(rows: &[&str]) -> SetValuedTableau {
    SetValuedTableau::shifted_from_rows(rows).unwrap()
}

fn kinds(r: &BumpRecord) -> Vec<&'static str> {
    r.kinds.iter().map(|k| k.name()).collect()
}

#[test]
fn insert_into_empty() {
    let (t, r) = sp_insert(&Tableau::new(), 3);
    assert_eq!(t, sh(&[&[3]]));
    assert_eq!(kinds(&r), ["R1"]);
    assert_eq!(r.path, [(1, 1)]);
}

#[test]
fn displayed_insertion_paths() {
    let (t, r) = sp_insert(&sh(&[&[4, 5], &[6]]), 2);
    assert_eq!(t, sh(&[&[2, 4, 5], &[6]]));
    assert_eq!(kinds(&r), ["D3", "C4", "C1"]);
    assert_eq!(r.path, [(1, 1), (1, 2), (1, 3)]);

    let start = sh(&[&[2, 3, 5], &[4]]);
    let (t, r) = sp_insert(&start, 2);
    assert_eq!(t, start);
    assert_eq!(kinds(&r), ["R3", "D4", "C2"]);
    assert_eq!(r.path, [(1, 2), (2, 2), (2, 3)]);
}

#[test]
fn forward_step_examples() {
    let u = InsertionState { base: sh(&[&[3]]), outer: Some(Outer::Row { row: 1, value: 5 }) };
    let (label, v) = forward_step(&u).unwrap();
    assert_eq!(label, TransitionLabel { pos: (1, 2), kind: Kind::R1 });
    assert_eq!(v, InsertionState::terminal(sh(&[&[3, 5]])));
    assert_eq!(forward_step(&v), Err(Error::Terminal));
}

#[test]
fn insertion_tableau_table() {
    let cases: [(&str, &[&[u32]]); 9] = [
        ("62", &[&[2, 6]]),
        ("46", &[&[4, 6]]),
        ("67", &[&[6, 7]]),
        ("6224", &[&[2, 4], &[6]]),
        ("4626", &[&[2, 4, 6]]),
        ("6752", &[&[2, 6, 7]]),
        ("622453", &[&[2, 3, 5], &[4, 6]]),
        ("462634", &[&[2, 3, 4], &[4, 6]]),
        ("675245", &[&[2, 4, 5], &[6, 7]]),
    ];
    for (word, rows) in cases {
        assert_eq!(sp_insertion_tableau(&w(word)), sh(rows), "{word}");
    }
}

#[test]
fn recording_tableau_table() {
    let cases: [(&str, &[&str]); 8] = [
        ("2243", &["1,2 3", "4"]),
        ("2433", &["1 2", "3,4"]),
        ("2443", &["1 2,3", "4"]),
        ("2423", &["1 2,3'", "4"]),
        ("4423", &["1,2 3'", "4"]),
        ("4233", &["1 2'", "3,4"]),
        ("4243", &["1 2',3", "4"]),
        ("4223", &["1 2',3'", "4"]),
    ];
    for (word, q) in cases {
        let (p, got) = p_and_q(&w(word), InsertionMode::Sp).unwrap();
        assert_eq!(p, sh(&[&[2, 3], &[4]]), "{word}");
        assert_eq!(got, sv(q), "{word}");
    }
}

#[test]
fn long_example() {
    let word = w("4,2,6,1,7,5,3,4,2,1,3,2");
    let (p, q) = p_and_q(&word, InsertionMode::Sp).unwrap();
    assert_eq!(p, sh(&[&[2, 3, 4, 5, 6, 7], &[4, 5, 6, 7], &[6, 7]]));
    assert_eq!(q, sv(&["1 2' 3 4' 5 10'", "6 7' 9' 12'", "8 11'"]));
    assert_eq!(reconstruct_word(&p, &q, InsertionMode::Sp).unwrap(), word);

    let i = [1, 2, 2, 3, 3, 4, 5, 5, 6, 8, 8, 9];
    let (_, qi) = semistandard_record(&word, &i, InsertionMode::Sp).unwrap();
    assert_eq!(qi, sv(&["1 2' 2 3' 3 8'", "4 5' 6' 9'", "5 8'"]));
}

#[test]
fn orthogonal_example() {
    let word = w("451132");
    let (p, q) = p_and_q(&word, InsertionMode::O).unwrap();
    assert_eq!(p, sh(&[&[1, 2, 4, 5], &[3]]));
    assert_eq!(q, sv(&["1 2 3',4' 6'", "5"]));
    assert_eq!(reconstruct_word(&p, &q, InsertionMode::O).unwrap(), word);
    let (_, qi) = semistandard_record(&word, &[1, 1, 3, 3, 3, 5], InsertionMode::O).unwrap();
    assert_eq!(qi, sv(&["1 1 3',3' 5'", "3"]));
    assert_eq!(
        semistandard_record(&word, &[1, 1, 1, 3, 3, 5], InsertionMode::O),
        Err(Error::NotAFactorization)
    );
}

#[test]
fn ck_chains() {
    let word = w("42312");
    let mut t = Tableau::new();
    let mut last = Vec::new();
    for &a in word.iter() {
        (t, last) = ck_insert(&t, a, CkMode::Fpf).unwrap();
    }
    assert_eq!(t, sh(&[&[2, 3, 4], &[4, 5]]));
    assert_eq!(last, [(1, 2), (2, 2), (2, 3)]);
    let (p, q) = p_and_q(&word, InsertionMode::Sp).unwrap();
    assert_eq!(p, t);
    assert_eq!(q, sv(&["1 2' 4'", "3 5'"]));
    assert_eq!(sp_insertion(&word).unwrap().records[4].path, last);

    let word = w("42321");
    let t = ck_insertion_tableau(&word, CkMode::Inv).unwrap();
    assert_eq!(t, sh(&[&[1, 2, 3, 4], &[4]]));
    let (p, q) = p_and_q(&word, InsertionMode::O).unwrap();
    assert_eq!(p, t);
    assert_eq!(q, sv(&["1 2' 4' 5'", "3"]));

    assert_eq!(ck_insert(&sh(&[&[2]]), 2, CkMode::Fpf), Err(Error::NotReducedWord));
    assert_eq!(ck_insert(&Tableau::new(), 2, CkMode::Inv).unwrap().0, sh(&[&[2]]));
}

#[test]
fn uninsert_chain() {
    let p = sh(&[&[2, 3], &[4]]);
    let q = sv(&["1 2',3'", "4"]);
    let (p1, q1, w1) = uninsert(&p, &q, &Word::empty()).unwrap();
    assert_eq!((p1.clone(), q1.clone(), w1.clone()), (sh(&[&[2, 4]]), sv(&["1 2',3'"]), w("3")));
    let (p2, q2, w2) = uninsert(&p1, &q1, &w1).unwrap();
    assert_eq!((p2.clone(), q2.clone(), w2.clone()), (sh(&[&[2, 4]]), sv(&["1 2'"]), w("23")));
    let (p3, q3, w3) = uninsert(&p2, &q2, &w2).unwrap();
    let (p4, q4, w4) = uninsert(&p3, &q3, &w3).unwrap();
    assert!(p4.is_empty() && q4.is_empty());
    assert_eq!(w4, w("4223"));
    assert_eq!(
        reconstruct_word(&Tableau::new(), &SetValuedTableau::new(), InsertionMode::Sp).unwrap(),
        Word::empty()
    );
    assert_eq!(uninsert(&p4, &q4, &w4), Err(Error::EmptyQ));
}

fn walk(v: &InsertionState, seed: Seed) -> Vec<(InsertionState, TransitionLabel)> {
    inverse_walk(v, Some(seed)).unwrap()
}

#[test]
fn inverse_paths_from_terminal() {
    let v = InsertionState::terminal(sh(&[&[2, 3, 4], &[4, 5]]));
    let seed = |corner, flavor| Seed { corner, flavor };
    let names = |p: &[(InsertionState, TransitionLabel)]| -> Vec<&str> {
        p.iter().map(|s| s.1.kind.name()).collect()
    };

    let p = walk(&v, seed((2, 3), Flavor::Row));
    assert_eq!(names(&p), ["iR1", "iR4"]);
    assert_eq!(p[1].0, InsertionState::initial(sh(&[&[2, 3, 5], &[4]]), 4));

    let p = walk(&v, seed((1, 4), Flavor::Row));
    assert_eq!(names(&p), ["iR2"]);
    assert_eq!(p[0].0, InsertionState::initial(v.base.clone(), 4));

    let p = walk(&v, seed((2, 3), Flavor::Col));
    assert_eq!(names(&p), ["iC1", "iD4", "iR3"]);
    assert_eq!(p[2].0, InsertionState::initial(sh(&[&[2, 3, 4], &[4]]), 2));

    // The outer value 5 is odd, so the diagonal step is iD4; the walk ends
    // at the letter 2, and row(V)·2 is symplectic while row(V)·3 is not.
    let p = walk(&v, seed((3, 3), Flavor::Col));
    assert_eq!(names(&p), ["iC2", "iD4", "iR3"]);
    assert_eq!(p[2].0, InsertionState::initial(v.base.clone(), 2));
    assert_eq!(sp_insert(&v.base, 2).0, v.base);
    assert_eq!(sp_insert(&v.base, 2).1.last(), Some(((3, 3), Kind::C2)));

    let d1 =
        InsertionState { base: sh(&[&[2, 3, 4], &[4, 6]]), outer: Some(Outer::Col { col: 3, value: 6 }) };
    let (u, label) = inverse_step(&d1, None).unwrap();
    assert_eq!(label, TransitionLabel { pos: (2, 3), kind: Kind::ID1 });
    assert_eq!(forward_step(&u).unwrap(), (TransitionLabel { pos: (2, 3), kind: Kind::D1 }, d1));
    assert!(matches!(inverse_step(&v, Some(seed((1, 1), Flavor::Col))), Err(Error::BadSeed(_))));
    assert!(matches!(inverse_step(&v, None), Err(Error::BadSeed(_))));
    assert_eq!(inverse_step(&InsertionState::initial(v.base.clone(), 2), None), Err(Error::Initial));
}

#[test]
fn inverse_undoes_forward_on_examples() {
    for word in ["426175342132", "622453", "4223", "42312"] {
        let word = w(word);
        let mut p = Tableau::new();
        for &a in word.iter() {
            let mut state = InsertionState::initial(p.clone(), a);
            while let Ok((label, next)) = forward_step(&state) {
                if !next.is_terminal() {
                    let (back, back_label) = inverse_step(&next, None).unwrap();
                    assert_eq!(back, state);
                    assert_eq!(back_label.pos, label.pos);
                    assert_eq!(back_label.kind.forward(), label.kind);
                }
                state = next;
            }
            p = state.base;
        }
    }
}

#[test]
fn non_injective_pair() {
    assert_eq!(sp_insertion_tableau(&w("265213")), sh(&[&[2, 3, 5, 7], &[6, 7]]));
    assert_eq!(sp_insertion_tableau(&w("265231")), sh(&[&[2, 3, 6, 7], &[6]]));
}

#[test]
fn admissibility_rejections() {
    let t = sh(&[&[2, 3]]);
    assert!(is_admissible(&InsertionState::terminal(t.clone())));
    assert!(!is_admissible(&InsertionState::terminal(sh(&[&[1, 2]]))));
    let s = InsertionState { base: t.clone(), outer: Some(Outer::Row { row: 2, value: 1 }) };
    assert!(matches!(check_admissible(&s), Err(Error::NotAdmissible(_))));
    let s = InsertionState { base: t, outer: Some(Outer::Col { col: 2, value: 2 }) };
    assert!(matches!(check_admissible(&s), Err(Error::NotAdmissible(_))));
}

#[test]
fn rejects_non_symplectic() {
    assert_eq!(p_and_q(&w("11"), InsertionMode::Sp), Err(Error::NotSymplectic));
    assert_eq!(p_and_q(&w("1"), InsertionMode::Sp), Err(Error::NotSymplectic));
    assert!(p_and_q(&w("11"), InsertionMode::O).is_ok());
}
