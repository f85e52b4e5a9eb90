use hookbias_core::analytic::{distinct_counts, distinct_counts_pentagonal};
fn main() {
    let n: usize = std::env::args().nth(1).unwrap().parse().unwrap();
    let t = std::time::Instant::now();
    let mut p = distinct_counts_pentagonal(1, n).unwrap();
    for _ in 1..9 { p.raise_min_part(); }
    println!("pentagonal+raise {:?}", t.elapsed());
    let t = std::time::Instant::now();
    let d = distinct_counts(9, n).unwrap();
    println!("dp {:?} equal={}", t.elapsed(), d == p);
}
