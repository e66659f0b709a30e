#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace mix2mix {

// Row-major RGB image, values in [0, 1].
struct Image {
    int height = 0;
    int width = 0;
    std::vector<double> rgb;  // height * width * 3

    Image() = default;
    Image(int h, int w) : height(h), width(w), rgb(static_cast<std::size_t>(h) * w * 3, 0.0) {}

    double& at(int y, int x, int c) { return rgb[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
    double at(int y, int x, int c) const { return rgb[(static_cast<std::size_t>(y) * width + x) * 3 + c]; }
};

// Camera-to-world transform, row-major; bottom row must be (0,0,0,1).
using Pose = std::array<std::array<double, 4>, 4>;

bool pose_bottom_row_valid(const Pose& pose);

// Flatten a pose to 16 values, row-major.
std::array<double, 16> pose_flat(const Pose& pose);

struct Scene {
    std::vector<Image> images;
    std::vector<Pose> poses;
    std::vector<std::string> names;

    std::size_t view_count() const { return images.size(); }
    void validate() const;
};

struct EditTask {
    std::string instruction;
    std::string original_caption;
    std::string edited_caption;
    double text_cfg = 7.5;
    double image_cfg = 1.5;

    void validate() const;
};

enum class LatentSpace { student, teacher };

struct LatentShape {
    int channels = 0;
    int height = 0;
    int width = 0;

    std::size_t numel() const {
        return static_cast<std::size_t>(channels) * height * width;
    }
    bool operator==(const LatentShape&) const = default;
};

// N per-view latent tensors sharing one shape, annotated with the timestep
// they live at and which model's latent space they belong to.
struct LatentBatch {
    std::vector<std::vector<double>> views;
    LatentShape shape;
    double timestep = 0.0;
    LatentSpace space = LatentSpace::student;

    std::size_t view_count() const { return views.size(); }
    void validate() const;

    static LatentBatch zeros(std::size_t n_views, LatentShape shape, double timestep,
                             LatentSpace space);
};

// Elementwise helpers used throughout the pipeline.
LatentBatch batch_like(const LatentBatch& proto);
void check_same_layout(const LatentBatch& a, const LatentBatch& b, const char* what);

}  // namespace mix2mix
