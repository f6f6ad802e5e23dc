fn main() {
    std::process::exit(rainbowdom::cli::run(std::env::args_os().skip(1)));
}
