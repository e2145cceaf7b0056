use qdouble::perm::Parity;
use qdouble::tower::{
    connecting_step_check, nonexistence_scan, padic_tower, partition_tower_check, symmetric_tower,
};

#[test]
fn padic_towers_up_to_cube() {
    for p in [2, 3, 5] {
        let r = padic_tower(p, 3).unwrap().verify().unwrap();
        assert!(!r.any_failed(), "p={p}: {r}");
        assert!(r.entries.iter().filter(|e| e.check == "triple compatibility").count() >= 1);
    }
}

#[test]
fn even_tower_to_s6() {
    let r = symmetric_tower(Parity::Even, 6).unwrap().verify().unwrap();
    assert!(!r.any_failed(), "{r}");
}

#[test]
fn odd_tower_to_s5() {
    let r = symmetric_tower(Parity::Odd, 6).unwrap().verify().unwrap();
    assert!(!r.any_failed(), "{r}");
}

#[test]
fn connecting_steps() {
    for n in 2..=4 {
        let r = connecting_step_check(n).unwrap();
        assert!(!r.any_failed(), "{r}");
        assert!(r.find("coaction intertwining").unwrap().passed());
    }
}

#[test]
fn nonexistence_six_through_s7() {
    let s = nonexistence_scan(6).unwrap();
    assert_eq!(s.scans.len(), 6);
    let r = s.report();
    assert!(!r.any_failed(), "{r}");
}

#[test]
fn partition_towers_at_three() {
    for mode in [Parity::Odd, Parity::Even] {
        let r = partition_tower_check(mode, 3).unwrap();
        assert!(!r.any_failed(), "{r}");
    }
}
