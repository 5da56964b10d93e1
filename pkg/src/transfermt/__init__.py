"""Transfer learning toolkit for low-resource NMT between related languages.

Pipeline pieces: corpus preprocessing, rule-based transliteration, joint BPE
segmentation with a shared vocabulary, an attentional LSTM encoder-decoder
with exact manual gradients, Adadelta training with parent-to-child parameter
transfer, beam-search decoding with length normalization, and BLEU scoring.
"""

__version__ = "0.1.0"

PAD, UNK, BOS, EOS = "<pad>", "<unk>", "<s>", "</s>"
PAD_ID, UNK_ID, BOS_ID, EOS_ID = 0, 1, 2, 3
RESERVED = (PAD, UNK, BOS, EOS)
