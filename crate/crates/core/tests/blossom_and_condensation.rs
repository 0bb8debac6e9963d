mod common;

use common::*;
use muntz::blossom::*;
use muntz::partition::muntz_tableau;
use muntz::scalar::{binomial, powi};
use muntz::symfunc::*;
use muntz::{Error, MuntzSpace, Partition, Rational};
use num_bigint::BigInt;

fn space(l: &Partition, n: usize) -> MuntzSpace {
    MuntzSpace::new(l.clone(), n).unwrap()
}

#[test]
fn blossom_equals_oracle() {
    let mut g = rng(10);
    for l in partitions(5, 4) {
        for n in l.len().max(1)..=4 {
            let s = space(&l, n);
            for _ in 0..5 {
                let u = distinct_positives(&mut g, n);
                assert_eq!(blossom(&s, &u).unwrap(), blossom_oracle(&s, &u).unwrap(), "{l} n={n}");
            }
        }
    }
}

#[test]
fn blossom_is_symmetric_and_diagonal() {
    let mut g = rng(11);
    for l in partitions(5, 4) {
        for n in l.len().max(1)..=4 {
            let s = space(&l, n);
            let u = positives(&mut g, n);
            let mut v = u.clone();
            v.reverse();
            assert_eq!(blossom(&s, &u).unwrap(), blossom(&s, &v).unwrap());
            let t = pos(&mut g);
            assert_eq!(blossom(&s, &vec![t.clone(); n]).unwrap(), s.phi(&t));
        }
    }
}

#[test]
fn worked_blossom_values() {
    let s = space(&p(&[1, 1, 1]), 3);
    let u = [r(1), r(2), r(3)];
    assert_eq!(blossom(&s, &u).unwrap()[0], q(45, 22));
    assert_eq!(blossom_oracle(&s, &u).unwrap()[0], q(45, 22));
    // closed form of the full blossom of (t, t^2, t^4)
    let e2 = r(11);
    let expected = vec![
        r(3) * r(3) * r(4) * r(5) / (r(8) * e2.clone()),
        r(4) * (r(4) + r(9) + r(36) + r(6) * r(6)) / (r(8) * e2.clone()),
        r(24) * r(36) / (r(8) * e2),
    ];
    assert_eq!(blossom(&s, &u).unwrap(), expected);
    assert_eq!(blossom_oracle(&space(&Partition::empty(), 2), &[r(1), r(3)]).unwrap(), vec![r(2), r(3)]);
}

#[test]
fn family_closed_forms() {
    let mut g = rng(12);
    let b = |n: u64, k: u64| Rational::from_integer(binomial(n, k));
    for n in 1..=4usize {
        let u = positives(&mut g, n);
        let a = args(&u);
        let prod = u.iter().fold(r(1), |acc, x| acc * x);
        for k in 1..=n {
            let s = space(&Partition::column(k), n);
            let phi = blossom(&s, &u).unwrap();
            let expected = b(n as u64, k as u64 - 1) / b(n as u64, k as u64) * prod.clone()
                * elementary(k as i64, &a)
                / elementary(k as i64 - 1, &a);
            assert_eq!(phi[n - 1], expected, "elementary k={k} n={n}");
        }
        for k in 0..=3u32 {
            let s = space(&Partition::row(k), n);
            let phi = blossom(&s, &u).unwrap();
            assert_eq!(phi[0], complete(k as i64 + 1, &a) / b((n as u64) + k as u64, k as u64 + 1));
            assert_eq!(
                phi[n - 1],
                elementary(n as i64, &a) * complete(k as i64, &a) / b(n as u64 + k as u64 - 1, k as u64)
            );
        }
    }
}

#[test]
fn pseudo_affinity_properties() {
    let mut g = rng(13);
    for l in partitions(5, 4) {
        for n in l.len().max(1)..=4 {
            let s = space(&l, n);
            for _ in 0..4 {
                let u = positives(&mut g, n - 1);
                let (a, b) = interval(&mut g);
                let t = pos(&mut g);
                assert_eq!(pseudo_affinity(&s, &u, &a, &b, &a).unwrap(), (r(0), r(1)));
                assert_eq!(pseudo_affinity(&s, &u, &a, &b, &b).unwrap(), (r(1), r(0)));
                let (alpha, beta) = pseudo_affinity(&s, &u, &a, &b, &t).unwrap();
                assert_eq!(alpha.clone() + beta.clone(), r(1));
                let with = |x: &Rational| {
                    let mut v = u.clone();
                    v.push(x.clone());
                    blossom(&s, &v).unwrap()
                };
                let (pa, pb, pt) = (with(&a), with(&b), with(&t));
                for i in 0..n {
                    assert_eq!(pt[i], beta.clone() * pa[i].clone() + alpha.clone() * pb[i].clone());
                    // any single component recovers the same factor
                    if pb[i] != pa[i] {
                        assert_eq!((pt[i].clone() - pa[i].clone()) / (pb[i].clone() - pa[i].clone()), alpha);
                    }
                }
            }
        }
    }
}

#[test]
fn complete_function_expansion() {
    let mut g = rng(14);
    for l in partitions(5, 4) {
        for n in l.len().max(1)..=4 {
            let s = space(&l, n);
            let u = positives(&mut g, n);
            let a = args(&u);
            let phi = blossom(&s, &u).unwrap();
            let mut rhs = r(0);
            for j in 1..=n {
                let ratio = r(1) / s.normalizer(j).clone();
                let term = ratio * complete(l.part(j + 1) as i64 + n as i64 - j as i64, &a) * phi[j - 1].clone();
                rhs = if j % 2 == 1 { rhs + term } else { rhs - term };
            }
            assert_eq!(complete(l.first() as i64 + n as i64, &a), rhs, "{l} n={n}");
        }
    }
}

fn draws(seed: u64, count: usize, mut f: impl FnMut(&mut rand_chacha::ChaCha8Rng)) {
    let mut g = rng(seed);
    for _ in 0..count {
        f(&mut g);
    }
}

#[test]
fn condensation_identities() {
    for l in partitions(5, 4) {
        for n in l.len().max(1)..=4 {
            let bot = l.bottom();
            let t = muntz_tableau(&l, n).unwrap();
            let mu = l.border_complement();
            draws(15, 8, |g| {
                let u = positives(g, n - 1);
                let (x, y) = (pos(g), pos(g));
                let su = |lam: &Partition, extra: &[&Rational]| schur(lam, &args_with(&u, extra));
                // two-variable condensation
                assert_eq!(
                    (x.clone() - y.clone()) * su(&l, &[&x, &y]) * su(&bot, &[]),
                    x.clone() * su(&l, &[&x]) * su(&bot, &[&y]) - y.clone() * su(&l, &[&y]) * su(&bot, &[&x])
                );
                for k in 1..n {
                    let eta = t.get(k).bottom();
                    assert_eq!(
                        su(&bot, &[&x]) * su(t.get(k), &[&y]) - su(&bot, &[&y]) * su(t.get(k), &[&x]),
                        (y.clone() - x.clone()) * su(&eta, &[]) * su(&l, &[&x, &y]),
                        "{l} n={n} k={k}"
                    );
                }
                if !l.is_empty() {
                    let mu0 = mu.bottom();
                    assert_eq!(
                        su(&mu0, &[&x]) * su(&l, &[&y]) - su(&mu0, &[&y]) * su(&l, &[&x]),
                        (y.clone() - x.clone()) * su(&mu, &[&x, &y]) * su(&bot, &[])
                    );
                }
                let (a, b) = (x.clone(), x.clone() + pos(g));
                let tt = pos(g);
                let c = a.clone() * b.clone() / tt.clone();
                let l1 = l.first() as i64;
                let lhs = a.clone() * (b.clone() - tt.clone()) * powi(&tt, l1 - 1) * su(&mu, &[&a, &c]) * su(&l, &[&b])
                    + b.clone() * (tt.clone() - a.clone()) * powi(&tt, l1 - 1) * su(&mu, &[&b, &c]) * su(&l, &[&a]);
                let rhs = (b.clone() - a.clone()) * powi(&tt, l1) * su(&mu, &[&a, &b]) * su(&l, &[&c]);
                assert_eq!(lhs, rhs, "{l} n={n}");
            });
        }
    }
}

#[test]
fn errors() {
    let s = space(&p(&[1]), 2);
    assert_eq!(blossom(&s, &[r(-1), r(2)]), Err(Error::NonPositiveArgument));
    assert_eq!(blossom_oracle(&s, &[r(2), r(2)]), Err(Error::RepeatedArguments));
    assert_eq!(pseudo_affinity(&s, &[r(1)], &r(2), &r(1), &r(1)), Err(Error::DegenerateInterval));
    assert!(matches!(pseudo_affinity(&s, &[], &r(1), &r(2), &r(1)), Err(Error::ArityMismatch { .. })));
    let _ = BigInt::from(0);
}
