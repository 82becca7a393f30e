use leibder::catalog::{self, BasisOrder};
use leibder::dsl::{from_algebra, parse, serialize, serialize_algebra, to_algebra};
use leibder::exactlin::{Field, Scalar};
use leibder::Algebra;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coefficient(field: Field) -> BoxedStrategy<Scalar> {
    let q = (-9i64..=9, 1i64..=4).prop_map(|(p, q)| Scalar::ratio(p, q));
    match field {
        Field::Q => q.boxed(),
        Field::Qi => (q.clone(), q).prop_map(|(a, b)| Scalar::gaussian(a, b)).boxed(),
    }
}

fn algebra() -> impl Strategy<Value = Algebra> {
    (1usize..=4, prop_oneof![Just(Field::Q), Just(Field::Qi)]).prop_flat_map(|(d, field)| {
        prop::collection::vec((0..d, 0..d, 0..d, coefficient(field)), 0..8).prop_map(move |entries| {
            let labels = (0..d).map(|i| format!("b{i}")).collect();
            Algebra::from_entries(field, labels, entries).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn serialize_parse_round_trip(alg in algebra()) {
        let text = serialize_algebra("random", &alg);
        let doc = parse(&text).unwrap();
        prop_assert_eq!(to_algebra(&doc).unwrap(), alg);
        prop_assert_eq!(serialize(&doc).unwrap(), text);
    }
}

#[test]
fn catalog_documents_round_trip() {
    let algebras = [
        catalog::kronecker(3, BasisOrder::Grouped).unwrap(),
        catalog::dieudonne(2).unwrap(),
        catalog::heisenberg_leibniz(2, &catalog::jordan(&Scalar::ratio(-1, 2), 2), BasisOrder::Interleaved).unwrap(),
        catalog::heisenberg_leibniz(1, &catalog::jordan(&Scalar::i(), 1), BasisOrder::Grouped).unwrap(),
    ];
    for alg in algebras {
        let doc = from_algebra("member", &alg);
        let back = to_algebra(&parse(&serialize(&doc).unwrap()).unwrap()).unwrap();
        assert_eq!(back, alg);
        assert_eq!(back.classify(), alg.classify());
    }
}

const POOL: &[&str] = &[
    "algebra", "field", "basis", "end", "Q", "Qi", "[", "]", ",", "=", "+", "-", "x", "y", "z", "1/2", "-3", "i",
    "2+i", "0/0", "1/", "#", "\n", " ", "é", "[x,y]", "99999999999999999999999/7",
];

fn mutate(rng: &mut ChaCha8Rng, text: &str) -> String {
    let mut chars: Vec<char> = text.chars().collect();
    for _ in 0..rng.gen_range(1..4) {
        match rng.gen_range(0..4) {
            0 if !chars.is_empty() => {
                let at = rng.gen_range(0..chars.len());
                chars.remove(at);
            }
            1 => {
                let at = rng.gen_range(0..=chars.len());
                let tok = POOL.choose(rng).unwrap();
                for (k, c) in tok.chars().enumerate() {
                    chars.insert(at + k, c);
                }
            }
            2 => {
                let mut lines: Vec<String> = chars.iter().collect::<String>().lines().map(String::from).collect();
                lines.shuffle(rng);
                chars = lines.join("\n").chars().collect();
            }
            _ => {
                let at = rng.gen_range(0..=chars.len());
                chars.truncate(at);
            }
        }
    }
    chars.into_iter().collect()
}

fn random_tokens(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(0..30);
    (0..n).map(|_| *POOL.choose(rng).unwrap()).collect::<Vec<_>>().join(" ")
}

#[test]
fn fuzz_documents_never_panic() {
    let seed_doc = serialize_algebra("k2", &catalog::kronecker(2, BasisOrder::Grouped).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut accepted = 0;
    for round in 0..1000 {
        let text = if round % 2 == 0 { mutate(&mut rng, &seed_doc) } else { random_tokens(&mut rng) };
        if let Ok(doc) = parse(&text) {
            accepted += 1;
            // Whatever parses must survive a canonical round trip.
            if let Ok(canonical) = serialize(&doc) {
                let again = parse(&canonical).expect("canonical text parses");
                assert_eq!(serialize(&again).unwrap(), canonical);
            }
        }
    }
    assert!(accepted < 1000);
}
