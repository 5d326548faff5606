import struct
import wave

import pytest

from idiomfix import TrimSpec, trim_wav


def write_fixture(path, *, rate=16000, channels=1, sampwidth=2, ms=1000):
    frames = rate * ms // 1000
    with wave.open(str(path), "wb") as fh:
        fh.setnchannels(channels)
        fh.setsampwidth(sampwidth)
        fh.setframerate(rate)
        payload = bytes((i * 7) % 256 for i in range(frames * channels * sampwidth))
        fh.writeframes(payload)
    return frames


def read_params(path):
    with wave.open(str(path), "rb") as fh:
        return fh.getparams(), fh.readframes(fh.getnframes())


class TestTrimSpec:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            TrimSpec(-1, 0)


class TestTrimWav:
    def test_basic_arithmetic(self, tmp_path):
        src, dst = tmp_path / "in.wav", tmp_path / "out.wav"
        write_fixture(src, ms=1000)
        report = trim_wav(src, dst, TrimSpec(100, 100))
        assert report.input_ms == 1000.0
        assert report.output_ms == 800.0

    def test_zero_trim_identity(self, tmp_path):
        src, dst = tmp_path / "in.wav", tmp_path / "out.wav"
        write_fixture(src)
        trim_wav(src, dst, TrimSpec(0, 0))
        p_in, frames_in = read_params(src)
        p_out, frames_out = read_params(dst)
        assert frames_in == frames_out
        assert p_in == p_out

    def test_stereo_16bit_250ms_front(self, tmp_path):
        # 16 kHz stereo 16-bit: 250 ms = 4000 frames = 16000 bytes
        src, dst = tmp_path / "in.wav", tmp_path / "out.wav"
        frames = write_fixture(src, rate=16000, channels=2, sampwidth=2, ms=1000)
        report = trim_wav(src, dst, TrimSpec(250, 0))
        assert report.frames_removed == 4000
        _, data_in = read_params(src)
        _, data_out = read_params(dst)
        assert len(data_in) - len(data_out) == 16000
        assert data_out == data_in[16000:]
        assert report.output_ms == (frames - 4000) * 1000 / 16000

    @pytest.mark.parametrize("sampwidth", [1, 2])
    @pytest.mark.parametrize("channels", [1, 2])
    @pytest.mark.parametrize("rate", [8000, 16000, 44100])
    def test_duration_and_format_grid(self, tmp_path, sampwidth, channels, rate):
        src, dst = tmp_path / "in.wav", tmp_path / "out.wav"
        write_fixture(src, rate=rate, channels=channels, sampwidth=sampwidth, ms=500)
        left, right = 37, 61
        report = trim_wav(src, dst, TrimSpec(left, right))
        frame_ms = 1000 / rate
        assert abs((report.input_ms - report.output_ms) - (left + right)) <= 2 * frame_ms
        p_in, _ = read_params(src)
        p_out, _ = read_params(dst)
        assert p_out.nchannels == channels
        assert p_out.framerate == rate
        assert p_out.sampwidth == sampwidth

    def test_fmt_chunk_bytes_preserved(self, tmp_path):
        src, dst = tmp_path / "in.wav", tmp_path / "out.wav"
        write_fixture(src, rate=44100, channels=2, sampwidth=2)
        trim_wav(src, dst, TrimSpec(10, 10))

        def fmt_chunk(path):
            data = path.read_bytes()
            pos = 12
            while pos + 8 <= len(data):
                cid = data[pos : pos + 4]
                (size,) = struct.unpack_from("<I", data, pos + 4)
                if cid == b"fmt ":
                    return data[pos + 8 : pos + 8 + size]
                pos += 8 + size + (size & 1)
            raise AssertionError("fmt chunk missing")

        assert fmt_chunk(src) == fmt_chunk(dst)

    def test_trim_covering_whole_file_rejected(self, tmp_path):
        src, dst = tmp_path / "in.wav", tmp_path / "out.wav"
        write_fixture(src, ms=200)
        with pytest.raises(ValueError, match="covers the whole file"):
            trim_wav(src, dst, TrimSpec(150, 100))
        assert not dst.exists()

    def test_rejects_non_wav(self, tmp_path):
        src = tmp_path / "in.wav"
        src.write_bytes(b"not a riff file at all")
        with pytest.raises(ValueError, match="RIFF"):
            trim_wav(src, tmp_path / "out.wav", TrimSpec(0, 0))

    def test_rejects_non_pcm_format(self, tmp_path):
        # hand-build an IEEE float WAV (format tag 3)
        src = tmp_path / "in.wav"
        fmt = struct.pack("<HHIIHH", 3, 1, 8000, 32000, 4, 32)
        data = b"\x00" * 64
        body = b"WAVE" + b"fmt " + struct.pack("<I", len(fmt)) + fmt
        body += b"data" + struct.pack("<I", len(data)) + data
        src.write_bytes(b"RIFF" + struct.pack("<I", len(body)) + body)
        with pytest.raises(ValueError, match="not uncompressed PCM"):
            trim_wav(src, tmp_path / "out.wav", TrimSpec(0, 0))

    def test_rejects_truncated_data_chunk(self, tmp_path):
        src = tmp_path / "in.wav"
        fmt = struct.pack("<HHIIHH", 1, 1, 8000, 16000, 2, 16)
        body = b"WAVE" + b"fmt " + struct.pack("<I", len(fmt)) + fmt
        body += b"data" + struct.pack("<I", 100) + b"\x00" * 10
        src.write_bytes(b"RIFF" + struct.pack("<I", len(body) + 90) + body)
        with pytest.raises(ValueError, match="truncated"):
            trim_wav(src, tmp_path / "out.wav", TrimSpec(0, 0))

    def test_output_readable_by_stdlib(self, tmp_path):
        src, dst = tmp_path / "in.wav", tmp_path / "out.wav"
        write_fixture(src, rate=8000, channels=1, sampwidth=1, ms=300)
        trim_wav(src, dst, TrimSpec(25, 25))
        params, frames = read_params(dst)
        assert params.nframes == 8000 * 250 // 1000
