import logging

from django.conf import settings
from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.pdfgen import canvas

from .verification import FAIL, PASS, SKIP

logger = logging.getLogger(__name__)

primary = colors.HexColor("#103946")
accent = colors.HexColor("#f2a33a")
dark = colors.HexColor("#1b1a17")
muted = colors.HexColor("#5d594f")
line_color = colors.HexColor("#e2d7cc")
white = colors.white

STATUS_COLORS = {
    PASS: colors.HexColor("#15803d"),
    FAIL: colors.HexColor("#b91c1c"),
}

margin = 36
row_gap = 6


def render_pdf(report, path, polynomials=()):
    """Write a verification report to ``path``.

    ``polynomials`` is an optional sequence of ``(label, text)`` pairs printed
    above the list of checks.
    """
    pdf = canvas.Canvas(str(path), pagesize=A4)
    width, height = A4
    content_w = width - (2 * margin)

    title = getattr(settings, "SGCHROM_REPORT_TITLE", "Signed graph chromatic polynomials")
    subtitle = getattr(settings, "SGCHROM_REPORT_SUBTITLE", "Verification report")

    def wrap_text(text, max_width, font_name, font_size):
        words = text.split()
        lines = []
        current = ""
        for word in words:
            test = f"{current} {word}".strip()
            if pdf.stringWidth(test, font_name, font_size) <= max_width:
                current = test
            else:
                if current:
                    lines.append(current)
                current = word
        if current:
            lines.append(current)
        return lines or [""]

    def draw_badge(x, y, text, color):
        pdf.setFillColor(color)
        pdf.roundRect(x, y, 48, 16, 7, stroke=0, fill=1)
        pdf.setFillColor(white)
        pdf.setFont("Helvetica-Bold", 8)
        pdf.drawCentredString(x + 24, y + 4.5, text)

    def draw_stripes():
        pdf.setFillColor(primary)
        pdf.rect(0, height - 18, width, 18, stroke=0, fill=1)
        pdf.setFillColor(accent)
        pdf.rect(0, height - 24, width, 6, stroke=0, fill=1)
        return height - 48

    def draw_section_title(y, text):
        pdf.setFillColor(primary)
        pdf.setFont("Helvetica-Bold", 11)
        pdf.drawString(margin, y, text)
        pdf.setStrokeColor(line_color)
        pdf.setLineWidth(1)
        pdf.line(margin, y - 6, margin + content_w, y - 6)
        return y - 22

    def ensure_room(y, needed):
        if y - needed >= margin:
            return y
        pdf.showPage()
        return draw_stripes()

    y = draw_stripes()
    header_h = 84
    pdf.setFillColor(white)
    pdf.setStrokeColor(line_color)
    pdf.roundRect(margin, y - header_h, content_w, header_h, 16, stroke=1, fill=1)
    pdf.setFillColor(dark)
    pdf.setFont("Helvetica-Bold", 16)
    pdf.drawString(margin + 16, y - 30, title)
    pdf.setFont("Helvetica", 10)
    pdf.setFillColor(muted)
    pdf.drawString(margin + 16, y - 46, subtitle)
    pdf.setFont("Helvetica", 9)
    pdf.drawString(margin + 16, y - 66, report.summary)
    overall = PASS if report.passed else FAIL
    draw_badge(margin + content_w - 64, y - 34, overall, STATUS_COLORS[overall])
    y -= header_h + 26

    if polynomials:
        y = draw_section_title(y, "Polynomials")
        for label, text in polynomials:
            lines = wrap_text(text, content_w - 16, "Courier", 9)
            y = ensure_room(y, 14 + 11 * len(lines))
            pdf.setFont("Helvetica", 8)
            pdf.setFillColor(muted)
            pdf.drawString(margin + 8, y, label.upper())
            y -= 12
            pdf.setFont("Courier", 9)
            pdf.setFillColor(dark)
            for line in lines:
                pdf.drawString(margin + 8, y, line)
                y -= 11
            y -= row_gap
        y -= 10

    y = draw_section_title(ensure_room(y, 40), "Checks")
    tally = report.counts
    for check in report.checks:
        detail = wrap_text(check.detail, content_w - 80, "Helvetica", 8) if check.detail else []
        y = ensure_room(y, 18 + 10 * len(detail))
        draw_badge(margin, y - 4, check.status, STATUS_COLORS.get(check.status, muted))
        pdf.setFont("Helvetica-Bold", 10)
        pdf.setFillColor(dark)
        pdf.drawString(margin + 60, y, check.name)
        pdf.setFont("Helvetica", 8)
        pdf.setFillColor(muted)
        pdf.drawRightString(margin + content_w, y, f"{check.seconds:.3f}s")
        y -= 12
        for line in detail:
            pdf.drawString(margin + 60, y, line)
            y -= 10
        y -= row_gap

    y = ensure_room(y, 24)
    pdf.setFont("Helvetica-Bold", 10)
    pdf.setFillColor(primary)
    pdf.drawString(
        margin,
        y - 8,
        f"{tally[PASS]} passed, {tally[FAIL]} failed, {tally[SKIP]} skipped",
    )
    pdf.showPage()
    pdf.save()
    logger.info("Wrote verification report to %s", path)
    return path
