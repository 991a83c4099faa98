fn main() {
    std::process::exit(knot_shadow::cli::run(std::env::args_os()));
}
