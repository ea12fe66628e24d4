fn main() {
    std::process::exit(visual_raag::cli::run());
}
