fn main() {
    std::process::exit(hb_interp::cli::run(std::env::args()));
}
