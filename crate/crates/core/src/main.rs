fn main() {
    std::process::exit(okounkov::cli::run(std::env::args_os()));
}
