# data_sources - Graph/coloring files and named fixture graphs
