use proptest::prelude::*;

use qdeg_core::shapes::{partitions_of, strict_partitions_of};
use qdeg_core::tableaux::{generate_concat, generate_sst, generate_syt};
use qdeg_core::{ConcatTableau, DescentSet, Partition, SignedShiftedTableau, StandardYoungTableau, StrictPartition};

fn pick<T: Clone>(v: &[T], k: usize) -> T {
    v[k % v.len()].clone()
}

proptest! {
    #[test]
    fn shifted_text_round_trips(n in 1usize..=7, a in any::<usize>(), b in any::<usize>()) {
        let shape = pick(&strict_partitions_of(n).unwrap(), a);
        let s = pick(&generate_sst(&shape), b);
        let back: SignedShiftedTableau = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn young_text_round_trips(n in 1usize..=7, a in any::<usize>(), b in any::<usize>()) {
        let shape = pick(&partitions_of(n), a);
        let t = pick(&generate_syt(&shape), b);
        let back: StandardYoungTableau = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn concatenated_text_round_trips(l in 1usize..=3, r in 1usize..=3, a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let left = pick(&strict_partitions_of(l).unwrap(), a);
        let right = pick(&strict_partitions_of(r).unwrap(), b);
        let t = pick(&generate_concat(&left, &right), c);
        let back: ConcatTableau = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn shapes_round_trip(n in 1usize..=10, a in any::<usize>()) {
        let p = pick(&partitions_of(n), a);
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        if let Some(s) = p.to_strict() {
            prop_assert_eq!(s.to_string().parse::<StrictPartition>().unwrap(), s);
        }
    }

    #[test]
    fn descent_bits_round_trip(n in 1usize..=12, bits in any::<u64>()) {
        let bits = bits & ((1u64 << (n - 1)) - 1) << 1;
        let d = DescentSet::from_bits(n, bits);
        prop_assume!(d.is_ok());
        let d = d.unwrap();
        prop_assert_eq!(DescentSet::new(n, d.iter()).unwrap(), d);
    }
}
