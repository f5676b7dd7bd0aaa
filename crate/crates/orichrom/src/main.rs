fn main() {
    std::process::exit(orichrom::cli::run());
}
