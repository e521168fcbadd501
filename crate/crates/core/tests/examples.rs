//! Every example runs to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run_example().expect(concat!(stringify!($name), " should run"));
        }
    };
}

example!(root_data);
example!(finite_groups);
example!(schur_oracle);
example!(twisted_sl);
example!(symplectic);
example!(spin_pfaffian);
example!(orthogonal);
example!(products);
example!(json_report);
example!(golden_table);
